Math.round(`t4 ${[true, , 255]} end`, (function (u) {
return u;
})(`t0 ${'a,b,c'} end`));
try {
print(/x/i);
Array.from({ length: 3 }, (e, i) => i * 0);
} catch (err7) {
print(err7);
}
print('abc');
var c8 = (u, v = /[0-9]+/g) => u + v;
if (Object.keys({ a: 1 })) {
eval("var ev = 3; ev * 2");
if (new Map()) {
print(((p, q = 100) => p + q)(new Array()));
} else {
`t4 ${[1, 2, 3].p1} end`;
}
print({ p00: new Object(3), length1: ((p, q = 100) => p + q)(c8), p12: c8.p0 }, Math.floor(c8, Math.max((function (u) {
return u;
})(/ab+c/), new WeakMap())));
}
switch ((function (u) {
return u;
})(String('hello') & (function (u) {
return u;
})(c8))) {
case 'hello':
String.raw`a${String(['a,b,c', c8, c8])}b`;
break;
case '0':
case 'hello':
c8 = Infinity;
default:
c8--;
}
{
for (let k = 0; k < 5; k++) {
k = Array.from({ length: 1 }, (e, i) => i * Infinity);
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
}
c8--;
}
if ([c8, , [[...[c8, 'abc']], String(c8)]]) {
for (var i = 0; i < 2; i++) {
eval("[1, 2].length");
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
class Base8 extends Box7 {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base8().value);
}
if ((({ x: 1, length: 2 }).prop) ?? ('abc')) {
print(c8, +(('' <= '' ? c8 : c8)));
(String(new Object()) ? Math.min(false !== c8, c8) : (new Array(3), [c8]));
} else {
c8 = (function (u) {
return u;
})([...[new Array(10), Math.max(c8, c8)]]);
for (var k0 = 0; k0 < 1; k0++) {
k0--;
var count = c8[[...[[0.5, k0, undefined], new Date(10)]]];
}
}
c8 |= `t3 ${0} end`;
} else {
c8 *= -(Object.keys({ a: 1 }) / null);
var { length: item7 = "x", ...rest7 } = { x: 1 };
}
({ p10: (c8.x, c8), prop1: c8, value2: !(c8) });
--c8;
for (let k4 in [1, 2]) {
k4 <<= (Object.keys({})) ?? (((c8, '0') ? /[0-9]+/g : c8));
}
