[Math.pow(Object.keys({}), ('\n') && ('abc')), , (function (u) {
return u;
})((/[0-9]+/g, true))];
print(3);
switch ((Array.from({ length: 2 }, (e, i) => i * 1e3)) && (new Map())) {
case "x":
switch (((String('abc')) || (String.raw`a${undefined}b`)) ?? (((function (u) {
return u;
})(true), ((p, q = 100) => p + q)(/[0-9]+/g)))) {
case 1e3:
print(/ab+c/);
break;
case /x/i:
case '':
print(({ x: 1, length: 2 })[([1, 2, 3].p0 ? (/ab+c/, '\u0041') : `t6 ${false} end`)], new Map());
default:
print([0x10, , null]);
}
break;
case '\u0041':
case false:
;
default:
print((([false, /ab+c/, /[0-9]+/g]) ?? ([/x/i, , /x/i]) ? Object.keys({ a: 1 }) : new Date()));
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 2);
w3.next == String([...[1, w3]]);
