;
print(undefined);
print('abc');
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(1);
}
m2(a) {
return a + this.x;
}
}
class Base8 extends C {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base8().value);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('\n');
}
m2(a) {
return a + this.x;
}
}
class A extends Base {
constructor() {
super('');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
