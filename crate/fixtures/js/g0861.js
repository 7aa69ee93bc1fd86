eval("[1, 2].length");
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(100);
}
m1(a) {
return a + this.x;
}
}
class C7 extends A {
constructor() {
super(-1);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C7().value);
Array.from({ length: 3 }, (e, i) => i * -1);
for (const k5 of 'ab') {
print((/[0-9]+/g) ?? (/ab+c/), String(0));
}
print(JSON.stringify((function (u) {
return u;
})(Math.pow(true, A))), ((p, q = true) => p + q)(Math.pow([A, , 10], String(10))));
