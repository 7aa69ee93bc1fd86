for (var k4 = 0; k4 < 3; k4++) {
k4 |= new WeakMap();
k4--;
}
print((function (u) {
return u;
})(Array.from({ length: 0 }, (e, i) => i * 255)));
for (const k5 in [1, 2]) {
+(((function (u) {
return u;
})(k5), -(true)));
}
let val8 = [(Object.keys([1, 2])) ?? (((p, q = null) => p + q)(2)), , ((p, q = '') => p + q)(Object.keys({ a: 1 }))];
(function (u) {
return u;
})(new Set()) !== !((val8) && (Infinity));
switch ((function (u) {
return u;
})(val8.y)) {
case 0x10:
var a3 = function* () {
yield 'abc';
yield* [1, 2];
};
break;
case NaN:
case undefined:
++val8;
default:
--a3;
}
try {
var val = Math.max(val8, new Error(3));
} catch (e4) {
print(e4.message);
}
{
{
val8 &= [...[val8.prop, String.raw`a${(val8 ? true : 1)}b`]];
for (let k2 = 0; k2 < 1; k2++) {
;
print(((p, q = null) => p + q)(undefined), (function (u) {
return u;
})(Object.keys([1, 2])));
}
}
}
val8++;
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
val8 = String.raw`a${val8.length / "x" + val8}b`;
