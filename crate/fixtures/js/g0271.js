var w = 1;
while (w > 0) {
w--;
class B1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B1(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
class C extends B1 {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
}
function g2(data, m) {
print(undefined, w | Array.from({ length: 1 }, (e, i) => i * 0x10) >> (m ? '' : [1, 2, 3].p0));
class B5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B5(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(B5.make().value);
function compute(str7, y) {
eval("1 + 2");
eval("1 + 2");
if (new.target) {
print('ctor');
}
return typeof ([...[str7[null], new Object(10)]]);
}
print(compute(/[0-9]+/g, 3));
if (new.target) {
print('ctor');
}
print(arguments.length);
return B5.next;
}
print(g2(false, '\n'));
w *= [...[[w, new Set()], `t1 ${[w, , 'hello']} end`]];
function g(y8, item) {
try {
++w;
w;
} catch (e8) {
print(e8);
}
return new Set();
}
print(g("x", 1e3));
for (let p in { a: 1, b: 2 }) {
p *= Object.keys([1, 2]);
}
try {
w = typeof (g2(+(w)));
print(w);
} catch (ex1) {
print(ex1);
}
switch ((function (u) {
return u;
})([false == "x", , { y0: w }])) {
case undefined:
const key8 = g(null / w.p1, (1) ?? ((function (u) {
return u;
})(w)));
break;
case 0:
case undefined:
var count8 = JSON.stringify(new Set());
default:
count8 = g2();
}
w = (Array.from({ length: 2 }, (e, i) => i * 1e3) ? (function (u) {
return u;
})(255) : Object.keys({ a: 1 })) / [...[-(null), (/x/i ? w : /ab+c/)]];
