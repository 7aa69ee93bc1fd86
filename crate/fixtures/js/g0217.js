eval("var ev = 3; ev * 2");
class Base0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base0(100);
}
m2(a) {
return a + this.x;
}
}
class C extends Base0 {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
print(new Date(0), ((p, q = 'a,b,c') => p + q)(typeof ((100) || ('hello'))));
var w7 = 3;
while (w7 > 0) {
w7--;
let c = (`t8 ${[Base0, , Base0]} end` ? /ab+c/ : Array.from({ length: 4 }, (e, i) => i * 2));
}
var a6 = String.raw`a${(Object.keys({ a: 1 }) ? JSON.stringify(Base0) : (w7) || (w7))}b`;
var x = new Date(1);
for (const k2 in { a: 1, b: 2 }) {
const arr = /ab+c/;
}
w7 = [Array.from({ length: 0 }, (e, i) => i * NaN), , 255];
