var a = Math.max(((p, q = undefined) => p + q)(Math.round(/ab+c/, true)), 'hello');
print(new WeakMap());
class Derived3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived3(true);
}
m1(a) {
return a + this.x;
}
}
print(Derived3.make().value);
class B3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B3(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
class Box1 extends B3 {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box1().value);
