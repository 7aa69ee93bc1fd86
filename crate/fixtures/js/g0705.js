switch ((JSON.stringify((NaN ? 10 : true))) ?? (Array.from({ length: 4 }, (e, i) => i * 10))) {
case 0x10:
;
break;
case NaN:
case /[0-9]+/g:
;
default:
print(Math.min(10, `t4 ${['a,b,c', , '\n']} end`), Object.keys({}));
}
print({ next0: new Set() < JSON.stringify(/ab+c/), p11: `t5 ${(0x10, /ab+c/)} end`, prop2: Math.min((undefined, 'a,b,c'), ((p, q = /ab+c/) => p + q)('')) }, new Array());
print(typeof ([]));
print(null, `t1 ${String((1e3, "x"))} end`);
var w = 1;
while (w > 0) {
w--;
{
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
}
}
w--;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
`t2 ${({ x: 1, length: 2 })[[...[1, w]]]} end`;
var w2 = 1;
while (w2 > 0) {
w2--;
w2 = Math.max(new Object(), new WeakMap());
}
;
print((w2) && (~(w2)), ({ p00: (function (u) {
return u;
})(w) } ? [new WeakMap(), [true], w2] : (function (u) {
return u;
})(w2[/x/i])));
