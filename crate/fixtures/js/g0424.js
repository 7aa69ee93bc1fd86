;
new Map();
var x3 = (u, v = true) => u + v;
class Box5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box5(10);
}
m2(a) {
return a + this.x;
}
}
class C extends Box5 {
constructor() {
super(NaN);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
var w = 0;
while (w > 0) {
w--;
((p, q = "x") => p + q)(!(new Date()));
}
Box5--;
var [m, , ...rest0] = [/x/i, 2, 3];
if (('str'.y) || (true)) {
function f9(tmp7) {
const n = undefined;
if (new.target) {
print('ctor');
}
return ((p, q = 3) => p + q)((new Object(), Math.max(C, x3)));
}
print(f9('\u0041'));
;
}
var b = (u, v = /[0-9]+/g) => u + v;
print(Array.from({ length: 0 }, (e, i) => i * 0x10), m);
