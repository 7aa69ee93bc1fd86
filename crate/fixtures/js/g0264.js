print(/ab+c/);
if (typeof (/[0-9]+/g)) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
class Derived1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived1(Infinity);
}
m2(a) {
return a + this.x;
}
}
class Box extends Derived1 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
var w = 0;
do {
w += 1;
} while (w < 4);
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 4);
eval("var ev = 3; ev * 2");
class Point6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point6(/x/i);
}
m1(a) {
return a + this.x;
}
}
class Base9 extends Point6 {
constructor() {
super(3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base9().value);
;
for (var k1 = 0; k1 < 4; k1++) {
switch (w3) {
case null:
function g() {
var val = JSON.stringify(((p, q = 'hello') => p + q)(new Array()));
if (new.target) {
print('ctor');
}
print(arguments.length);
return (function (u) {
return u;
})({ y0: String(/ab+c/) });
}
print(g());
break;
case 255:
case /x/i:
++k1;
default:
Point6--;
}
for (var p0 in [1, 2]) {
--w3;
}
}
var tmp7 = (u, v = false) => u + v;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
