print(-1);
let tmp = Object.keys({});
print((function (u) {
return u;
})({ p10: [...[tmp, null]], prop1: tmp }), tmp);
debugger;
class Derived1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived1(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class Point3 extends Derived1 {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point3().value);
print(Derived1[`t3 ${[...[Point3, true]]} end`]);
for (let p of 'ab') {
print(Object.keys({ a: 1 }));
}
Point3++;
