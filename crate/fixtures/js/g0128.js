var w = 0;
do {
w += 1;
} while (w < 1);
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
m1(a) {
return a + this.x;
}
}
print(Derived8.make().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
Derived8 -= ({ x: 1, length: 2 })[(w, '0')];
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(null);
}
m1(a) {
return a + this.x;
}
}
print(B.make().value);
Derived8++;
switch (w[Array.from({ length: 3 }, (e, i) => i * 255)]) {
case "x":
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class Base extends Box7 {
constructor() {
super(Infinity);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
break;
case false:
case /[0-9]+/g:
print([...[w.y, ((p, q = 2) => p + q)(Box7[100])]]);
default:
print(((p, q = false) => p + q)(Base));
}
var res = (u, v = /ab+c/) => u + v;
({ y0: { length0: Math.abs(/ab+c/, /ab+c/), x1: new Set() } });
{
w++;
}
