{
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(true);
}
m2(a) {
return a + this.x;
}
}
class Derived extends A {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
--A;
}
;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
0.5;
