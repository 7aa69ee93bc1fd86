function wrap(arr5) {
class B5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B5(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
print(B5.make().value);
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7(false);
}
m2(a) {
return a + this.x;
}
}
print(Box7.make().value);
print(arguments.length);
return { next0: (function (u) {
return u;
})('str'.next), next1: Array.from({ length: 1 }, (e, i) => i * -1), p02: new Date() };
}
wrap('');
print(Array.from({ length: 4 }, (e, i) => i * 1e3));
;
wrap(new Error(), (`t4 ${true} end`) ?? (new WeakMap()));
print(Array.from({ length: 0 }, (e, i) => i * 2), ((p, q = null) => p + q)(new Set()));
try {
;
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(NaN);
}
m2(a) {
return a + this.x;
}
}
print(B.make().value);
} catch (err7) {
print(err7);
} finally {
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(1);
}
m0(a) {
return a + this.x;
}
}
class A extends Point {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
}
var x7 = (u, v = 'a,b,c') => u + v;
x7++;
print([...[`t1 ${[...[2, 2]]} end`, (Array.from({ length: 3 }, (e, i) => i * 10) ? [...[255, 'a,b,c']] : String.raw`a${x7}b`)]]);
String.raw`a${(`t4 ${x7} end`, -(''))}b`;
class C4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C4(3);
}
m0(a) {
return a + this.x;
}
}
print(C4.make().value);
