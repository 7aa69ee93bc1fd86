class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/x/i);
}
m1(a) {
return a + this.x;
}
}
class Point7 extends C {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point7().value);
for (const p in { a: 1, b: 2 }) {
class A15 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A15(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
print(A15.make().value);
}
print(('0' & ~(Point7)) || (new Array(0)));
C = { value0: (C ? C : Point7) | [/[0-9]+/g], next1: ({ x: 1, length: 2 }).length };
eval("1 + 2");
new WeakMap();
var w = 0;
do {
w += 1;
} while (w < 3);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(/x/i);
}
m2(a) {
return a + this.x;
}
}
class Derived extends C9 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
switch ((JSON.stringify('str'.y)) && (new Map())) {
case 'abc':
if (String.raw`a${([1, 2, 3].value) && (new Array(1))}b`) {
class A5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A5(undefined);
}
m0(a) {
return a + this.x;
}
}
print(A5.make().value);
A5 -= (`t4 ${w} end`) || (JSON.stringify(Math.abs(0, /[0-9]+/g)));
print(new Date());
} else {
eval("var ev = 3; ev * 2");
const z = (function (u) {
return u;
})(new Object());
}
break;
case 100:
case undefined:
eval("var ev = 3; ev * 2");
default:
eval("1 + 2");
}
;
