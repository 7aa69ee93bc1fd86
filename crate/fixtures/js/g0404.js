eval("1 + 2");
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
class Point5 extends Derived {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point5().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
print(Derived, Array.from({ length: 0 }, (e, i) => i * 3));
Derived--;
