eval("var ev = 3; ev * 2");
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(1);
}
m1(a) {
return a + this.x;
}
}
print(A.make().value);
var { value: b = /ab+c/, ...tail5 } = { x: 1 };
for (const p7 in [1, 2]) {
eval("[1, 2].length");
}
print(b, Array.from({ length: 2 }, (e, i) => i * 0x10));
b++;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
class Box3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box3(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class Box extends Box3 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
const obj = (new Object() ? (function (u) {
return u;
})(String('\u0041')) : `t8 ${(A) || (A)} end`);
(Object.keys({}) ? ((p, q = undefined) => p + q)(new Array(1)) : Math.sqrt(obj.value, Box3[Infinity]));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
