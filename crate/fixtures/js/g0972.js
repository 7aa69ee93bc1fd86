class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(true);
}
m2(a) {
return a + this.x;
}
}
class Point extends A {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
if (Point[new Set()]) {
eval("[1, 2].length");
Point &= [...[String(A), [...[Math.round(false, true), ((p, q = /[0-9]+/g) => p + q)('')]]]];
}
class Derived8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived8(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(Derived8.make().value);
;
;
Point++;
A <<= ({ x: 1, length: 2 }).prop;
var w = 0;
do {
w += 1;
} while (w < 3);
