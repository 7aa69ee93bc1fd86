print(null);
;
print(true);
print({ y0: +(`t7 ${255} end`), p11: '\u0041' });
class A2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A2('\u0041');
}
m1(a) {
return a + this.x;
}
}
class A8 extends A2 {
constructor() {
super(2);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A8().value);
A8++;
const y = Object.keys([1, 2]);
const n = new Set();
print((String.raw`a${+(false)}b` ? [(function (u) {
return u;
})(/ab+c/)] : 'a,b,c'));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
var w = 1;
while (w > 0) {
w--;
var m0 = function* () {
yield undefined;
yield* [1, 2];
};
}
