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
m1(a) {
return a + this.x;
}
}
class Box7 extends Derived {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box7().value);
for (let k in [1, 2]) {
for (var i2 = 0; i2 < 2; i2++) {
Derived = [1, 2, 3][Math.sqrt([Derived, 0, Box7], String.raw`a${Box7}b`)];
;
}
}
print((Box7 ? String.raw`a${Math.round(Derived, Derived)}b` : 'str'[Object.keys({})]));
debugger;
var w1 = 1;
while (w1 > 0) {
w1--;
;
}
print(new Set());
print(JSON.stringify(new Set()));
class C3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C3(1e3);
}
m1(a) {
return a + this.x;
}
}
print(C3.make().value);
w1 = [`t0 ${Math.max(/x/i, Box7)} end`, , ((p, q = 1) => p + q)((w1, "x"))];
