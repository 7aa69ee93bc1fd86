const acc3 = ([String.raw`a${0.5}b`], [...[new Map(), 0 != '0']]);
;
try {
for (var k7 = 0; k7 < 4; k7++) {
k7 = (String.raw`a${acc3.value}b`, String('a,b,c'));
class C3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C3('');
}
m1(a) {
return a + this.x;
}
}
class Derived5 extends C3 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived5().value);
}
} catch (err2) {
print(err2);
}
switch ({ prop0: acc3[[...[/[0-9]+/g, undefined]]], y1: [...[('abc') ?? (acc3), ((p, q = true) => p + q)(undefined)]], y2: ((p, q = /[0-9]+/g) => p + q)({ p10: undefined }) }) {
case true:
var arr4 = (u, v = /ab+c/) => u + v;
break;
case 1:
case 'hello':
acc3;
default:
print(acc3, `t5 ${String.raw`a${Array.from({ length: 0 }, (e, i) => i * 100)}b`} end`);
}
class Point5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point5(false);
}
m1(a) {
return a + this.x;
}
}
print(Point5.make().value);
