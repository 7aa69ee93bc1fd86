if (new Date(3)) {
print(new Set(), JSON.stringify(String.raw`a${[]}b`));
;
} else {
var w7 = 2;
while (w7 > 0) {
w7--;
[(255) ?? (1), , void ((null, /x/i))];
}
{
const str9 = [...[({ p00: w7, prop1: 10 } ? w7 : '0'), ((p, q = null) => p + q)(typeof (1e3))]];
;
}
}
print(0.5);
;
switch (JSON.stringify(NaN)) {
case undefined:
;
break;
case /ab+c/:
case '\n':
;
default:
;
}
let str = new Date(3);
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(true);
}
m1(a) {
return a + this.x;
}
}
class Base extends C {
constructor() {
super(1);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
++str;
C = { length0: (function (u) {
return u;
})(str[C]) };
Base &= [JSON.stringify(undefined), (function (u) {
return u;
})((function (u) {
return u;
})(C)), [String(0), (str) && (0.5), ~(C)]];
class Box1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box1('\u0041');
}
m1(a) {
return a + this.x;
}
}
print(Box1.make().value);
try {
if ([...[Math.pow(Box1, Math.floor(Box1, Box1)), Array.from({ length: 2 }, (e, i) => i * 1e3)]]) {
;
Box1 = C;
for (var k5 = 0; k5 < 4; k5++) {
++k5;
Array.from({ length: 0 }, (e, i) => i * Infinity);
}
}
throw new Error('hello');
} catch (e5) {
print(e5);
}
