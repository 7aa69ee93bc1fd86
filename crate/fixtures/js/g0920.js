for (var k = 0; k < 3; k++) {
class Base2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base2(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(Base2.make().value);
eval("var ev = 3; ev * 2");
}
var w = 1;
while (w > 0) {
w--;
w = `t2 ${{ next0: [w, , w], p01: '\u0041' }} end`;
}
Array.from({ length: 4 }, (e, i) => i * 0);
;
print(Array.from({ length: 0 }, (e, i) => i * 3), [...[JSON.stringify([-1, '0']), ((w, '\n'), (w, undefined))]]);
w--;
var w29 = 3;
while (w29 > 0) {
w29--;
w &= `t7 ${/[0-9]+/g != w29} end` & ([2, , w] ? [w29, /ab+c/] : { y0: '\n', prop1: w29, value2: w });
}
for (let i17 = 0; i17 < 2; i17++) {
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(10);
}
m1(a) {
return a + this.x;
}
}
print(Derived.make().value);
if (Array.from({ length: 4 }, (e, i) => i * 0.5)) {
print(Math.max(Object.keys({}), w29));
}
}
