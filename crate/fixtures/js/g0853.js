[NaN, , new Date() != Math.sqrt(false, undefined)];
eval("1 + 2");
print('\u0041');
print([new Set(), , JSON.stringify(/x/i)]);
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(10);
}
m2(a) {
return a + this.x;
}
}
class A11 extends B {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A11().value);
print('a,b,c', NaN);
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(0x10);
}
m1(a) {
return a + this.x;
}
}
print(C.make().value);
switch (A11) {
case null:
A11[String([])];
break;
case 0:
case '\u0041':
--C;
default:
print(typeof (((p, q = 1e3) => p + q)(/x/i == Infinity)));
}
class B1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B1(/x/i);
}
m1(a) {
return a + this.x;
}
}
class Derived6 extends B1 {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived6().value);
--C;
A11[A11.next];
