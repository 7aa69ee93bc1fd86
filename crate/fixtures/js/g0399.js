print((`t8 ${(function (u) {
return u;
})(/ab+c/)} end`, 'str'.value));
var w4 = 0;
do {
w4 += 1;
} while (w4 < 2);
{
;
let data3 = JSON.stringify((JSON.stringify(true), (false ? w4 : w4)));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
{
switch (new Object(0)) {
case /ab+c/:
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(null);
}
m0(a) {
return a + this.x;
}
}
class Box extends C9 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
break;
case /x/i:
case 255:
eval("print('e')");
default:
C9++;
}
}
for (let p9 of [1, 2, 3]) {
let val5 = Array.from({ length: 2 }, (e, i) => i * 3);
}
{
for (let k of []) {
eval("var ev = 3; ev * 2");
}
{
w4 = ((p, q = undefined) => p + q)(((p, q = /x/i) => p + q)(new Object(3)));
}
}
String({ value0: undefined, x1: w4, value2: w4 }) ^ w4.prop;
print(String.raw`a${{ next0: `t7 ${w4} end`, length1: NaN, p12: [...[w4, /x/i]] }}b`, [new Error(), [`t5 ${w4} end`, , Array.from({ length: 4 }, (e, i) => i * Infinity)], null]);
if ((function (u) {
return u;
})((((p, q = undefined) => p + q)(w4)) && (1))) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
switch (-([w4, , (w4, 'hello')])) {
case true:
const b = new Map();
break;
case '\n':
case 10:
++w4;
default:
print(String.raw`a${(b[w4]) ?? (b)}b`, 0.5);
}
} else {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
(new Object(10)) || (null);
}
print(Object.keys([1, 2]));
