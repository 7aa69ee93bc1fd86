;
print('\n');
function g(z, res3) {
;
eval("1 + 2");
var w3 = 3;
while (w3 > 0) {
w3--;
z *= Object.keys({ a: 1 });
}
if (new.target) {
print('ctor');
}
return [((p, q = false) => p + q)(JSON.stringify(res3)), { next0: (function (u) {
return u;
})(w3), value1: +(w3), p12: [z, , false] }, { p00: void (10) }];
}
g('0', '\u0041');
for (var i = 0; i < 3; i++) {
i--;
i *= i;
}
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(undefined);
}
m2(a) {
return a + this.x;
}
}
class C extends Point {
constructor() {
super(Infinity);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
C++;
print((function (u) {
return u;
})({ y0: ((p, q = null) => p + q)(-1), p01: new Set(), next2: [/x/i, C, Point] }), new Error(0));
for (const k of []) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
}
var w5 = 3;
while (w5 > 0) {
w5--;
print(Array.from({ length: 2 }, (e, i) => i * 255));
}
print(Math.pow(new Set(), { prop0: '0' < C, next1: -(255) }), [Array.from({ length: 3 }, (e, i) => i * 1e3), [1, 2, 3].x]);
var w = 0;
while (w > 0) {
w--;
['', , { next0: (w, w) }];
}
