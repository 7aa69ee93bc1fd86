;
try {
var w9 = 0;
while (w9 > 0) {
w9--;
eval("var ev = 3; ev * 2");
}
class Derived6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived6(-1);
}
m0(a) {
return a + this.x;
}
}
class Base extends Derived6 {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
throw new Error('abc');
} catch (ex) {
print(ex);
}
function make(z9) {
for (const k8 of 'ab') {
print(JSON.stringify({ y0: String(z9), p01: [...[k8, undefined]], value2: JSON.stringify(k8) }), new WeakMap());
}
z9 = new Error();
print((String(new Error(0)) ? [`t7 ${z9} end`, , !(NaN)] : ({ x: 1, length: 2 })[[...['\n', z9]]]), 'abc');
return [...[z9, (JSON.stringify(z9), z9)]];
}
print(make(false));
for (var k2 = 0; k2 < 5; k2++) {
print([String.raw`a${(undefined ? k2 : '0')}b`], null);
{
;
}
}
;
print(-(String(Array.from({ length: 3 }, (e, i) => i * 1))), String.raw`a${([] ? JSON.stringify('\n') : /x/i)}b`);
for (var p in { a: 1, b: 2 }) {
String.raw`a${`t0 ${((p, q = '\u0041') => p + q)('hello')} end`}b`;
}
print(Array.from({ length: 0 }, (e, i) => i * 2), { p00: ({ p00: 3, value1: /[0-9]+/g } ? 'str'.next : 'hello'), length1: ((/[0-9]+/g ? 0.5 : false)) || (`t6 ${0} end`), y2: Array.from({ length: 3 }, (e, i) => i * 0) });
var w = 0;
do {
w += 1;
} while (w < 1);
