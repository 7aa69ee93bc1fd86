print('\n');
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('abc');
}
m1(a) {
return a + this.x;
}
}
class B4 extends Derived {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B4().value);
class A7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A7(null);
}
m1(a) {
return a + this.x;
}
}
print(A7.make().value);
try {
if (Math.pow((Infinity) ?? ([A7, , B4]), ((p, q = null) => p + q)(B4[A7]))) {
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(null);
}
m2(a) {
return a + this.x;
}
}
class Base0 extends Box {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base0().value);
B4--;
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break outer;
}
}
}
throw new RangeError('\n');
} catch (ex0) {
print(ex0);
}
Derived;
var y6 = async function () {
return await undefined;
};
Derived--;
A7 = [...[B4, (function (u) {
return u;
})(new Set())]];
A7++;
Derived.value;
{
;
}
