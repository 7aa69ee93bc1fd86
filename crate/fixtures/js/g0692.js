eval("print('e')");
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
for (let k6 = 0; k6 < 2; k6++) {
print(((p, q = /x/i) => p + q)(!([...[false, '\u0041']])), +(String.raw`a${null}b`));
w1 = String((0.5 ? '0' : w1)) << k6;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(-1);
}
m2(a) {
return a + this.x;
}
}
class B extends A {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
