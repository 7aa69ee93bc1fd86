for (let k9 = 0; k9 < 5; k9++) {
k9--;
for (let i = 0; i < 4; i++) {
print([...[((p, q = '0') => p + q)(new Map()), ((p, q = '\n') => p + q)(k9)]], (k9.value ? Math.abs((k9, true), i >> /ab+c/) : new Array()));
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B('hello');
}
m1(a) {
return a + this.x;
}
}
class Derived extends B {
constructor() {
super('abc');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
}
}
print(Array.from({ length: 4 }, (e, i) => i * Infinity), new Object());
[String.raw`a${`t3 ${undefined} end`}b`, , Array.from({ length: 2 }, (e, i) => i * -1)];
try {
for (let k = 0; k < 2; k++) {
k |= k[Array.from({ length: 4 }, (e, i) => i * 2)];
eval("1 + 2");
}
function wrap(flag, res15) {
eval("print('e')");
res15++;
res15 = Math.floor(((p, q = undefined) => p + q)([...[false, res15]]), (function (u) {
return u;
})(`t5 ${true} end`));
print(arguments.length);
return String(JSON.stringify([...[res15, flag]]));
}
print(wrap(true, /[0-9]+/g));
} catch (err) {
print(err.message);
} finally {
;
}
try {
if (Object.keys([1, 2])) {
class B16 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B16('abc');
}
m2(a) {
return a + this.x;
}
}
class Derived2 extends B16 {
constructor() {
super('');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived2().value);
for (var j = 0; j < 3; j++) {
eval("print('e')");
;
}
}
;
throw new RangeError('abc');
} catch (ex6) {
print(ex6.message);
}
print(/ab+c/, String.raw`a${Math.pow([1, 'hello'], 0)}b`);
var w = 0;
while (w > 0) {
w--;
switch (w.y) {
case 'abc':
class Box2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box2(NaN);
}
m2(a) {
return a + this.x;
}
}
class C extends Box2 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
break;
case "x":
case undefined:
print(w, C);
default:
;
}
}
eval("var ev = 3; ev * 2");
print(new WeakMap(), w[Array.from({ length: 2 }, (e, i) => i * 2) >>> (/[0-9]+/g, null)]);
for (var i14 = 0; i14 < 3; i14++) {
++i14;
var w5 = 2;
while (w5 > 0) {
w5--;
var w18 = 0;
do {
w18 += 1;
} while (w18 < 4);
}
}
