;
/ab+c/;
var x2 = (typeof ('abc') ? '\u0041' : Object.keys({})) === JSON.stringify(((p, q = -1) => p + q)(/x/i));
;
var [b, , ...tail] = ['\n', 2, 3];
var a0 = { x0: (JSON.stringify(x2), (b ? b : /[0-9]+/g)), x1: [Array.from({ length: 2 }, (e, i) => i * NaN)] };
{
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/x/i);
}
m0(a) {
return a + this.x;
}
}
class Box8 extends Base {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box8().value);
eval("[1, 2].length");
}
{
var n5 = { x2, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
const y1 = `t0 ${"x"} end`;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
function wrap4() {
Math.max(new Set(), +(b[0x10]));
print(arguments.length);
return b;
}
print(wrap4());
