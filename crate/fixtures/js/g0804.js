var w = 0;
do {
w += 1;
} while (w < 3);
;
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(1);
}
m1(a) {
return a + this.x;
}
}
class B6 extends Base {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B6().value);
(Object.keys({ a: 1 }), JSON.stringify(String.raw`a${Base}b`));
eval("print('e')");
for (let k7 = 0; k7 < 4; k7++) {
k7 -= k7;
print([[Math.max(w, 1), , (B6, /x/i)], , ((p, q = 'hello') => p + q)({ length0: Base, x1: Base })]);
}
for (let i = 0; i < 4; i++) {
Array.from({ length: 2 }, (e, i) => i * NaN);
for (let j = 0; j < 1; j++) {
Base = j[new Map()];
eval("[1, 2].length");
}
}
w[[[w, , true], , (Base ? 1e3 : Base)]];
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(C.make().value);
if (`t0 ${B6} end`) {
var item3 = { C, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
}
C = new Set();
