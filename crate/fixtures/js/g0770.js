var flag0 = { flag0, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\n']: 1, ...{ q: 2 } };
print(((p, q = '') => p + q)([flag0, , `t5 ${flag0} end`]), flag0);
var w = 0;
do {
w += 1;
} while (w < 4);
switch (w.p1) {
case 2:
class Point0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point0(0.5);
}
m2(a) {
return a + this.x;
}
}
print(Point0.make().value);
break;
case 0.5:
case undefined:
w.p1;
default:
Point0 |= Array.from({ length: 0 }, (e, i) => i * Infinity);
}
function run8(obj, x6) {
x6 += (x6[(x6) ?? (w)], ((p, q = /[0-9]+/g) => p + q)(`t0 ${w} end`));
for (var k4 in { a: 1, b: 2 }) {
const val9 = Object.keys([1, 2]);
}
++flag0;
return (function (u) {
return u;
})((obj) && (/ab+c/)) ^ new Set();
}
print(run8('', 'abc'));
var w6 = 0;
do {
w6 += 1;
} while (w6 < 2);
for (var i5 = 0; i5 < 4; i5++) {
flag0 = w6;
w = Array.from({ length: 3 }, (e, i) => i * 0.5);
}
flag0 <<= Array.from({ length: 4 }, (e, i) => i * 3);
if (flag0) {
;
flag0--;
var x = function (...u) {
return u.length;
};
} else {
class Base1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base1(10);
}
m0(a) {
return a + this.x;
}
}
class Base extends Base1 {
constructor() {
super('hello');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
class A0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A0(false);
}
m2(a) {
return a + this.x;
}
}
print(A0.make().value);
}
