eval("[1, 2].length");
for (let j = 0; j < 1; j++) {
for (var k9 = 0; k9 < 4; k9++) {
++k9;
{
new Error(0);
const res6 = (function (u) {
return u;
})(j[(null, k9)]);
}
}
j &= String.raw`a${j}b`;
}
for (const k in { a: 1, b: 2 }) {
;
}
for (let j4 = 0; j4 < 2; j4++) {
for (let i4 = 0; i4 < 3; i4++) {
j4 = new Date(0);
{
j4 &= true;
print(new Object(10), 'a,b,c');
}
}
let item = ([...[new Date(), String.raw`a${j4}b`]], new Set());
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box('hello');
}
m1(a) {
return a + this.x;
}
}
class A8 extends Box {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A8().value);
for (let i = 0; i < 2; i++) {
var w9 = 0;
do {
w9 += 1;
} while (w9 < 1);
class Box2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box2('\u0041');
}
m0(a) {
return a + this.x;
}
}
class Base8 extends Box2 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base8().value);
}
Box <<= Object.keys([1, 2]);
print('0');
eval("var ev = 3; ev * 2");
