class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class C1 extends B {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C1().value);
print([B, [1, 2, 3].prop, void (/[0-9]+/g)], (NaN) && (Array.from({ length: 4 }, (e, i) => i * 3)));
const acc = C1;
B++;
print((`t6 ${(-1) || (false)} end`, (function (u) {
return u;
})([])));
var obj = (Math.pow((B ? C1 : -1), /ab+c/ / B)) || (([] ? null : acc));
print([...[((p, q = 'hello') => p + q)(`t0 ${1e3} end`), ~(Math.min('hello', 'abc'))]]);
eval("1 + 2");
obj += ((p, q = /[0-9]+/g) => p + q)([('' ? undefined : /ab+c/), , (function (u) {
return u;
})(C1)]);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
let c = '0';
