print(-1);
try {
;
{
{
const b3 = { p10: { next0: [...[1e3, false]], p11: 'str'.x, x2: String(/x/i) }, y1: { value0: /x/i } };
;
}
var w = 3;
while (w > 0) {
w--;
const n7 = { x0: w.p0, length1: `t8 ${(/x/i, w)} end`, p02: JSON.stringify(w) };
}
}
throw new RangeError('\u0041');
} catch (e) {
print(e);
} finally {
;
}
print('0');
print(['\n', , Array.from({ length: 1 }, (e, i) => i * 1)], String.raw`a${[1, 2, 3][[1, 2, 3].p0]}b`);
print((/x/i, JSON.stringify(String(/[0-9]+/g))), `t3 ${`t0 ${new Date(1)} end`} end`);
print(0.5);
print('abc');
var w16 = 0;
do {
w16 += 1;
} while (w16 < 1);
for (var j1 = 0; j1 < 5; j1++) {
print(new Map(), [((true) && (j1), [j1, , j1]), , Math.sqrt(w16, new Set())]);
for (var p of 'ab') {
try {
;
throw new TypeError('hello');
} catch (e18) {
print(e18.message);
}
}
}
--w16;
for (var k5 = 0; k5 < 1; k5++) {
class Box1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box1(null);
}
m2(a) {
return a + this.x;
}
}
class Base4 extends Box1 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base4().value);
k5--;
}
