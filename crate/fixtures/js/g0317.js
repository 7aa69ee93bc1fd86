var w = 0;
do {
w += 1;
} while (w < 2);
var w5 = 0;
while (w5 > 0) {
w5--;
class Derived8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived8(true);
}
m2(a) {
return a + this.x;
}
}
class Box8 extends Derived8 {
constructor() {
super(-1);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box8().value);
}
try {
const item = ((function (u) {
return u;
})(Object.keys({})), ['\n']);
} catch (err2) {
print(err2.message);
}
{
3;
print(`t0 ${w5[w] & String(null)} end`, `t2 ${[...[{ p00: undefined, p11: w5, p12: NaN }, `t6 ${/ab+c/} end`]]} end`);
}
++w5;
w5 = String(new Date());
