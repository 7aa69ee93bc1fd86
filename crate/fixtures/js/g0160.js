({ x: 1, length: 2 })[[...[(function (u) {
return u;
})('\n'), null]]];
;
for (let i = 0; i < 5; i++) {
eval("var ev = 3; ev * 2");
class Derived8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived8(true);
}
m2(a) {
return a + this.x;
}
}
class Point extends Derived8 {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
}
class B0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B0(0.5);
}
m1(a) {
return a + this.x;
}
}
print(B0.make().value);
print(0x10, B0);
