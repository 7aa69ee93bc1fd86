eval("[1, 2].length");
function make6(x5) {
const acc = x5.p0;
for (let p6 in { a: 1, b: 2 }) {
x5--;
}
return [{ next0: (x5, 'hello'), p01: x5['hello'] }, , ((p, q = 'hello') => p + q)([...['0', acc]])];
}
make6('hello');
print('hello');
class B7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B7(null);
}
m0(a) {
return a + this.x;
}
}
class A4 extends B7 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A4().value);
A4 &= Math.round(new Array(10), (function (u) {
return u;
})(Array.from({ length: 1 }, (e, i) => i * 1)));
const res3 = JSON.stringify((function (u) {
return u;
})(10) == make6(B7));
if (B7) {
A4.p1;
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(C9.make().value);
} else {
print([Math.abs(/ab+c/, (B7 ? A4 : '0')), ((/ab+c/) && (res3) ? [...[A4, res3]] : JSON.stringify(true))], [res3[[B7, B7, A4]], new Date(0) === { x0: null, value1: B7, length2: A4 }]);
}
