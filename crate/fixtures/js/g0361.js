for (const p of [1, 2, 3]) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
class B extends C {
constructor() {
super("x");
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
}
var str = (new WeakMap() ? [String('a,b,c')] : undefined);
str++;
var w4 = 0;
while (w4 > 0) {
w4--;
var acc5 = { str, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
function check(a7) {
;
--a7;
for (const k6 of [1, 2, 3]) {
new Map();
}
return String((((p, q = 'a,b,c') => p + q)(null) ? { length0: a7, p11: 'hello', p12: /[0-9]+/g } : JSON.stringify(a7)));
}
print(check(undefined));
