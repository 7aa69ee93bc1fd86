{
for (const p of []) {
;
}
print(3);
}
print('0');
var w = 0;
do {
w += 1;
} while (w < 2);
for (var k7 = 0; k7 < 5; k7++) {
if (k7) {
var w9 = 3;
while (w9 > 0) {
w9--;
eval("var ev = 3; ev * 2");
}
var w4 = 3;
while (w4 > 0) {
w4--;
;
}
w |= [...[Object.keys({}), String.raw`a${(/[0-9]+/g, k7)}b`]];
}
k7 = ((p, q = /[0-9]+/g) => p + q)(Object.keys({}));
}
{
var w24 = 0;
do {
w24 += 1;
} while (w24 < 3);
class Derived8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived8(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
class Derived7 extends Derived8 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived7().value);
}
let acc = { prop0: ([w, , /x/i] ? `t0 ${null} end` : w), prop1: [...[JSON.stringify(w), 100 != NaN]], p12: String(typeof (w)) };
print([], Array.from({ length: 1 }, (e, i) => i * 0x10));
var val = function* () {
yield true;
yield* [1, 2];
};
var w10 = 2;
while (w10 > 0) {
w10--;
var item5 = function (...u) {
return u.length;
};
}
