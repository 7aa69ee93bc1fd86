class B1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B1(0);
}
m0(a) {
return a + this.x;
}
}
print(B1.make().value);
function check0(acc, data) {
class B2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B2('hello');
}
m0(a) {
return a + this.x;
}
}
class Base9 extends B2 {
constructor() {
super(100);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base9().value);
B2 &= [...[(0.5 ? acc : data) / `t0 ${Base9} end`, [...[String(data), (acc, Base9)]]]];
return ((p, q = 1e3) => p + q)(JSON.stringify(void (undefined)));
}
print(check0(0, /x/i));
++B1;
debugger;
[B1];
B1 = check0(((p, q = '\n') => p + q)(B1), (function (u) {
return u;
})(new Array()));
