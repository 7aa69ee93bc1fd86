;
print(`t6 ${undefined} end`, String.raw`a${((p, q = true) => p + q)(String.raw`a${'\u0041'}b`)}b`);
;
((function (u) {
return u;
})(String.raw`a${undefined}b`) ? ~('') : Array.from({ length: 0 }, (e, i) => i * 100));
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base("x");
}
m1(a) {
return a + this.x;
}
}
class Point9 extends Base {
constructor() {
super('');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point9().value);
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
print({ p10: `t0 ${new Date(10)} end`, prop1: Object.keys({}) });
/x/i;
class C3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C3(0);
}
m1(a) {
return a + this.x;
}
}
class Box extends C3 {
constructor() {
super(0x10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
--C3;
