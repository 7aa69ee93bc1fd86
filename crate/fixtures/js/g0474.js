var w5 = 1;
while (w5 > 0) {
w5--;
try {
for (const p2 in { a: 1, b: 2 }) {
w5 &= JSON.stringify(w5[`t4 ${p2} end`]);
}
} catch (err) {
print(err);
} finally {
eval("[1, 2].length");
}
}
try {
try {
--w5;
} catch (ex0) {
print(ex0.message);
}
class C2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C2(0x10);
}
m0(a) {
return a + this.x;
}
}
class Box extends C2 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
} catch (err5) {
print(err5.message);
}
if (new Object()) {
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('abc');
}
m2(a) {
return a + this.x;
}
}
print(A.make().value);
var val = JSON.stringify(new Set());
eval("[1, 2].length");
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
function run5(c, m) {
w5 = Object.keys({}) << [('a,b,c', ''), , 'abc'];
var w1 = 0;
do {
w1 += 1;
} while (w1 < 2);
if (new.target) {
print('ctor');
}
return +((function (u) {
return u;
})((Infinity, m)));
}
print(run5('abc', "x"));
let count = [...[Object.keys([1, 2]), ((p, q = /ab+c/) => p + q)({ x0: /[0-9]+/g, value1: w5 })]];
count--;
for (let j8 = 0; j8 < 4; j8++) {
++j8;
if ((run5(new Error()) ? ({ prop0: null }, ({ x: 1, length: 2 })[w5]) : String.raw`a${Object.keys([1, 2])}b`)) {
j8 = [...[Object.keys({ a: 1 }), ([...[undefined, 255]] ? '0' : (w5) ?? ('hello'))]];
switch ([String(w5), , 1e3]) {
case '\n':
--j8;
break;
case /ab+c/:
case 0:
++w5;
default:
print([], Math.pow(count[{ y0: count }], count[+('\u0041')]));
}
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
