/[0-9]+/g;
String.raw`a${[...[[], ({ x: 1, length: 2 }).length]]}b`;
for (var j9 = 0; j9 < 1; j9++) {
if (String.raw`a${(function (u) {
return u;
})(((p, q = '0') => p + q)(/x/i))}b`) {
var flag7 = j9;
++flag7;
} else {
j9 -= { p10: ((p, q = true) => p + q)(j9 >> j9), length1: [...[(function (u) {
return u;
})(j9), j9]] };
}
j9--;
}
;
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(false);
}
m2(a) {
return a + this.x;
}
}
print(Point.make().value);
for (var k3 = 0; k3 < 3; k3++) {
for (const k in [1, 2]) {
(String.raw`a${String(k)}b`) ?? ((function (u) {
return u;
})(k));
}
for (const p in { a: 1, b: 2 }) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue outer;
}
}
}
}
