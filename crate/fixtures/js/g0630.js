for (const p of []) {
({ y0: /x/i, p11: p.prop, value2: String(p) } < [p, , String.raw`a${/[0-9]+/g}b`]);
}
((p, q = '0') => p + q)(Infinity);
print(Math.max(Object.keys([1, 2]), String.raw`a${Object.keys({ a: 1 })}b`), Object.keys({ a: 1 }) * ((p, q = /x/i) => p + q)('abc' < 2));
print([], ({ x: 1, length: 2 }).prop);
eval("var ev = 3; ev * 2");
print('str'[`t6 ${(function (u) {
return u;
})(0)} end`]);
eval("print('e')");
var w1 = 3;
while (w1 > 0) {
w1--;
w1 <<= [...[true | (null, /ab+c/), w1]];
}
w1 &= JSON.stringify(new Map());
