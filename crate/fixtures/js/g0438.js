var tmp3 = (u, v = 10) => u + v;
if (0) {
Math.sqrt(((p, q = true) => p + q)(tmp3), Array.from({ length: 4 }, (e, i) => i * 1e3));
}
print(JSON.stringify((function (u) {
return u;
})(String(/ab+c/))));
for (var p8 in { a: 1, b: 2 }) {
print(!(tmp3), String(p8));
}
var w0 = 1;
while (w0 > 0) {
w0--;
var w8 = 1;
while (w8 > 0) {
w8--;
print({ length0: Math.round(new WeakMap(), String(/ab+c/)), x1: { value0: String(1) }, p02: new Set() }, tmp3);
}
}
var w7 = 1;
while (w7 > 0) {
w7--;
{
tmp3 = { y0: 'hello', value1: new Error(10), p12: (tmp3 - /ab+c/, [...[w7, w7]]) };
}
}
w7--;
--w0;
eval("var ev = 3; ev * 2");
