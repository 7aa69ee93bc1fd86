print(100);
{
if (String.raw`a${undefined}b`) {
print(true);
print(undefined);
}
}
const data4 = ((p, q = '\u0041') => p + q)(String(new Array()));
(Object.keys([1, 2])) ?? (((p, q = 'hello') => p + q)(((p, q = '0') => p + q)(10)));
print((function (u) {
return u;
})([]));
var w = 0;
do {
w += 1;
} while (w < 4);
let z = (String(`t8 ${Infinity} end`), -1);
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(100);
}
m2(a) {
return a + this.x;
}
}
class A0 extends B {
constructor() {
super(0x10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A0().value);
var [c1, , ...tail5] = ["x", 2, 3];
w = String.raw`a${data4}b`;
