{
{
var acc = (u, v = undefined) => u + v;
acc &= (function (u) {
return u;
})(new Date());
}
const key = ~(new WeakMap());
}
for (const p in { a: 1, b: 2 }) {
let arr0 = "x";
}
'str'.p0;
var w2 = 0;
while (w2 > 0) {
w2--;
if ([1, 2, 3][String.raw`a${[w2, '\n', 0]}b`]) {
switch ({ value0: (((p, q = /ab+c/) => p + q)(w2), []), y1: ((p, q = NaN) => p + q)(Math.round(/ab+c/, '0')) }) {
case 100:
const obj0 = String(String(Math.pow(Infinity, undefined)));
break;
case 1e3:
case /[0-9]+/g:
print(Object.keys({}) % (Infinity ? String(2) : Array.from({ length: 3 }, (e, i) => i * 255)));
default:
print((10) ?? (w2));
}
eval("1 + 2");
}
}
print(w2);
w2 = w2[new Map()];
{
print(String(String.raw`a${String.raw`a${w2}b`}b`), `t5 ${{ value0: (w2 ? /ab+c/ : 1e3), p01: [], length2: w2 }} end`);
w2 += w2;
}
w2 += w2;
eval("[1, 2].length");
