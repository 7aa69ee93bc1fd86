class Box0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box0(0);
}
m1(a) {
return a + this.x;
}
}
class Point1 extends Box0 {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point1().value);
Point1 += String.raw`a${JSON.stringify([...[100, Point1]])}b`;
++Point1;
const data = String.raw`a${String(Box0)}b` <= new Map();
print(Array.from({ length: 3 }, (e, i) => i * 0));
Box0 = (undefined ? ((Point1, true)) || ((data, Box0)) : String(new Set()));
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(/x/i);
}
m0(a) {
return a + this.x;
}
}
class C extends B {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
Point1 -= (function (u) {
return u;
})(3);
C--;
