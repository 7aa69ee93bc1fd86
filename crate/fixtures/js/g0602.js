print(-1);
;
for (let j = 0; j < 5; j++) {
{
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
class Derived extends Box {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
Array.from({ length: 2 }, (e, i) => i * -1);
}
{
var item = u => {
return u;
};
}
}
function f() {
switch (String(Object.keys([1, 2]))) {
case /[0-9]+/g:
print(~(new Object()), true);
break;
case Infinity:
case /ab+c/:
[...[('abc' ? '\u0041' : 'a,b,c') * 1e3 > 10, new Map()]];
default:
print(/x/i);
}
for (const k in { a: 1, b: 2 }) {
print('\u0041');
}
if (new.target) {
print('ctor');
}
return ((function (u) {
return u;
})(('\n', 0x10))) || (({ prop0: /x/i }) || ((0.5, '\u0041')));
}
print(f());
print(/ab+c/);
;
for (var p of 'ab') {
switch ([p, , p]) {
case Infinity:
p++;
break;
case /[0-9]+/g:
case /ab+c/:
p = p[(function (u) {
return u;
})(p[p])];
default:
print((function (u) {
return u;
})(/x/i));
}
}
var w6 = 0;
do {
w6 += 1;
} while (w6 < 2);
class A2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A2(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
class Base1 extends A2 {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base1().value);
var w = 3;
while (w > 0) {
w--;
eval("[1, 2].length");
}
