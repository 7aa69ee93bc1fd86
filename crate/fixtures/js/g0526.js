class Box8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box8(0.5);
}
m2(a) {
return a + this.x;
}
}
class A6 extends Box8 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A6().value);
switch ([new Date(1)]) {
case false:
print(({ value0: ({ x: 1, length: 2 }).next, y1: (function (u) {
return u;
})(null), p02: (function (u) {
return u;
})(A6) }) || (JSON.stringify(new WeakMap())), (Math.floor(false, !(A6)), void (Object.keys({ a: 1 }))));
break;
case /[0-9]+/g:
case /ab+c/:
A6 += A6;
default:
print(A6.value);
}
eval("1 + 2");
print(A6, A6.p0);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
A6++;
Box8--;
