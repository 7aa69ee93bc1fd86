eval("var ev = 3; ev * 2");
print('', String.raw`a${{ y0: { y0: '' }, value1: String.raw`a${0}b` }}b`);
print(1);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
if ([...[new Date(), 'hello']]) {
switch (new Object()) {
case undefined:
for (const p of [1, 2, 3]) {
print(!(p[Math.round(p, '')]));
}
break;
case /[0-9]+/g:
case 3:
(Math.round(Array.from({ length: 3 }, (e, i) => i * 255), [1, 2, 3][true]) ? ((p, q = -1) => p + q)(true) : [undefined, '\n', 0] << (function (u) {
return u;
})(null));
default:
print(10);
}
var w = 0;
do {
w += 1;
} while (w < 1);
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break;
}
}
} else {
switch (Object.keys({ a: 1 })) {
case 0:
var w6 = 0;
do {
w6 += 1;
} while (w6 < 3);
break;
case /ab+c/:
case 3:
w6 *= [...[(function (u) {
return u;
})(String(w6)), ((function (u) {
return u;
})(w6), /ab+c/)]];
default:
eval("print('e')");
}
}
eval("var ev = 3; ev * 2");
function wrap() {
print(0);
;
eval("[1, 2].length");
print(arguments.length);
return { p10: String.raw`a${/[0-9]+/g}b`, x1: JSON.stringify((function (u) {
return u;
})(/x/i)) };
}
wrap();
