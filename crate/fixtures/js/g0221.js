{
new Set();
print(NaN, ((p, q = 1e3) => p + q)((function (u) {
return u;
})(((p, q = 255) => p + q)(100))));
}
function g0(obj2, n) {
let item1 = 1;
if (new.target) {
print('ctor');
}
return (((p, q = /[0-9]+/g) => p + q)((10 ? obj2 : obj2)) ? `t0 ${(item1) ?? (undefined)} end` : ({ y0: item1 }, 255));
}
print(g0(true, 1));
new Date(0);
if (new Date(10)) {
var w = 0;
while (w > 0) {
w--;
w = `t6 ${(w) ?? (false)} end`;
}
++w;
} else {
var w12 = 0;
do {
w12 += 1;
} while (w12 < 3);
w12++;
}
print((`t2 ${((p, q = /[0-9]+/g) => p + q)(null)} end`) || (Array.from({ length: 3 }, (e, i) => i * 255)), Array.from({ length: 3 }, (e, i) => i * Infinity));
if (({ x: 1, length: 2 })['str'.next]) {
for (const k of []) {
eval("var ev = 3; ev * 2");
}
try {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
const z4 = `t6 ${(Array.from({ length: 1 }, (e, i) => i * 100), [])} end`;
} catch (ex) {
print(ex);
} finally {
print(Array.from({ length: 2 }, (e, i) => i * 2));
}
}
var acc = String.raw`a${(Math.round(1, 0.5)) ?? (('abc' ? /[0-9]+/g : null))}b`;
class Base6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base6(null);
}
m2(a) {
return a + this.x;
}
}
class Box extends Base6 {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
(JSON.stringify(new Object()), [Math.abs(null, 255)]);
eval("print('e')");
