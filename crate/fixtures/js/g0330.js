let acc3 = new Map();
var w7 = 2;
while (w7 > 0) {
w7--;
Math.min((new Array(3), Array.from({ length: 2 }, (e, i) => i * 3)), Object.keys([1, 2]));
}
var w1 = 0;
while (w1 > 0) {
w1--;
w1 = (['abc', String.raw`a${w1}b`], (((p, q = 2) => p + q)(false) ? Array.from({ length: 2 }, (e, i) => i * NaN) : new WeakMap()));
}
class Point8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point8(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class A4 extends Point8 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A4().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
for (let k0 = 0; k0 < 5; k0++) {
;
print({ value0: (10 ? new Object(0) : ((p, q = /ab+c/) => p + q)(/[0-9]+/g)), p11: [acc3 * undefined, [w1, , acc3], ((p, q = 'a,b,c') => p + q)('a,b,c')], next2: (function (u) {
return u;
})(k0.p0) });
}
const acc2 = [...[(function (u) {
return u;
})(/[0-9]+/g >> Infinity), { length0: /ab+c/, length1: Point8[w7], length2: Math.max(w7, '\u0041') }]];
var a8 = u => {
return u;
};
class A9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A9(Infinity);
}
m2(a) {
return a + this.x;
}
}
print(A9.make().value);
