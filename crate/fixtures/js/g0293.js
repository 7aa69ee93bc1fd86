var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
for (let k = 0; k < 3; k++) {
var w = 0;
do {
w += 1;
} while (w < 3);
function wrap1(val4, val) {
;
w += k[(/[0-9]+/g ? true : /x/i) != w[w]];
val4 = null;
print(arguments.length);
return (function (u) {
return u;
})(-(String.raw`a${val}b`));
}
print(wrap1(2, true));
}
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class B0 extends B {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B0().value);
class Point5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point5(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
class Derived extends Point5 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
w0 = B0;
function h(key7) {
({ length0: new WeakMap(), x1: String('\n'), y2: 'a,b,c' }, new Map());
function make(item) {
Derived = -1;
if (new.target) {
print('ctor');
}
print(arguments.length);
return String.raw`a${[new Set(), , { y0: '\n' }]}b`;
}
print(make(/ab+c/));
if (/x/i) {
let obj = ((function (u) {
return u;
})(["x"])) ?? (Array.from({ length: 0 }, (e, i) => i * -1));
print(make([...[[], (function (u) {
return u;
})(B)]], B[/ab+c/] ^ (function (u) {
return u;
})(w0)), make());
eval("var ev = 3; ev * 2");
}
print(arguments.length);
return Object.keys({}) != B;
}
print(h(false));
switch (B0) {
case '\n':
var data = (u, v = "x") => u + v;
break;
case 10:
case null:
;
default:
data--;
}
{
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(undefined);
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
}
