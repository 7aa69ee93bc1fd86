var m3 = { m3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
const z7 = String.raw`a${([] ? m3.p1 : 1)}b`;
Object.keys({ a: 1 });
;
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
m0(a) {
return a + this.x;
}
}
class A5 extends Base {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A5().value);
for (var k of 'ab') {
m3--;
}
function f3() {
for (let p15 of []) {
Base &= +(String(((p, q = 0.5) => p + q)(p15)));
}
eval("var ev = 3; ev * 2");
if (new.target) {
print('ctor');
}
return Base.prop;
}
print(f3());
m3 = +(new WeakMap());
