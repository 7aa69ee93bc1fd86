outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
let arr = JSON.stringify(['a,b,c', , (1) ?? (/x/i)]);
eval("var ev = 3; ev * 2");
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
class Point extends B {
constructor() {
super('abc');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
var w9 = 2;
while (w9 > 0) {
w9--;
if (JSON.stringify((Point) || (new Map()))) {
const data6 = (function (u) {
return u;
})(({ x: 1, length: 2 }).next);
arr = String.raw`a${(function (u) {
return u;
})('str'[0x10])}b`;
((p, q = Infinity) => p + q)((arr) ?? (String("x")));
} else {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break outer;
}
}
{
w9 *= String.raw`a${{ prop0: false } >= (null, true)}b`;
let a6 = ((p, q = /x/i) => p + q)(arr);
}
}
}
var w5 = 0;
while (w5 > 0) {
w5--;
++Point;
}
if (1) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(100);
}
m1(a) {
return a + this.x;
}
}
class A1 extends C {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A1().value);
w5 = void (Object.keys({ a: 1 }));
}
function run8() {
let n = [(function (u) {
return u;
})(w5), , (('abc' ? false : Point)) || (NaN & 'hello')];
{
w9 += JSON.stringify(new Error() >> String(w5));
eval("1 + 2");
}
for (let p3 of []) {
;
}
print(arguments.length);
return Array.from({ length: 0 }, (e, i) => i * 0);
}
print(run8());
