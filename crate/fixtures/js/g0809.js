print(`t4 ${('str'.y, `t0 ${''} end`)} end`, `t4 ${2} end`);
;
class Base7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base7(/x/i);
}
m0(a) {
return a + this.x;
}
}
class Derived extends Base7 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
const res7 = [...[Math.floor(Derived, (Base7 ? '\u0041' : Base7)), Object.keys([1, 2])]];
Base7 &= ((p, q = Infinity) => p + q)(Array.from({ length: 0 }, (e, i) => i * 255));
