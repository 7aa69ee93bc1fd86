var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
print(w0, { prop0: `t1 ${[w0, , w0]} end`, x1: new WeakMap(), length2: w0.x });
print([[...[/x/i, /ab+c/]], , (((p, q = 0.5) => p + q)(0), ((p, q = 0x10) => p + q)(null))]);
switch ({ p00: new Object(), value1: new Set() }) {
case /[0-9]+/g:
print((!(Math.max(w0, w0))) ?? (Array.from({ length: 0 }, (e, i) => i * 100)), { y0: 'str'.prop, prop1: Math.floor((w0) ?? (w0), String.raw`a${w0}b`), length2: (function (u) {
return u;
})(String(w0)) });
break;
case /[0-9]+/g:
case 10:
debugger;
default:
w0 = ((p, q = /[0-9]+/g) => p + q)(w0);
}
