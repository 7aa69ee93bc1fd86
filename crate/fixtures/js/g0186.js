[1, 2, 3].next;
const x = String.raw`a${((p, q = NaN) => p + q)(String(/x/i))}b`;
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break;
}
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
if (String(Object.keys({}))) {
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B('0');
}
m0(a) {
return a + this.x;
}
}
class Point2 extends B {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point2().value);
var key0 = +(Array.from({ length: 0 }, (e, i) => i * 0x10));
B = [...[Point2, ((p, q = true) => p + q)("x")]];
}
;
print(undefined);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('\u0041');
}
m2(a) {
return a + this.x;
}
}
print(Base.make().value);
for (let k6 in [1, 2]) {
--k6;
}
class Box6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box6('');
}
m1(a) {
return a + this.x;
}
}
class Box9 extends Box6 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box9().value);
