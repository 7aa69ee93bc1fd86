print(({ x: 1, length: 2 })[[Object.keys([1, 2]), , ((p, q = 0) => p + q)(/ab+c/)]], [String(JSON.stringify('\n')), new Array()]);
print(/x/i);
print([...[-1, { length0: 255 }]], new WeakMap());
class Derived0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived0(255);
}
m2(a) {
return a + this.x;
}
}
class Base9 extends Derived0 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base9().value);
