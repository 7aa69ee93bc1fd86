print(((p, q = 0x10) => p + q)(`t1 ${[null]} end`), (function (u) {
return u;
})(((Infinity ? 'hello' : 3) ? (function (u) {
return u;
})(/x/i) : `t8 ${100} end`)));
(new Set()) || (new WeakMap());
eval("[1, 2].length");
for (var k0 = 0; k0 < 1; k0++) {
((p, q = /x/i) => p + q)(k0);
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('hello');
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
}
;
try {
print(null);
class Box8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box8('hello');
}
m0(a) {
return a + this.x;
}
}
class Box7 extends Box8 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box7().value);
} catch (ex3) {
print(ex3);
}
