print(3);
;
;
const c = { prop0: (String(1), Object.keys({})), value1: new Map() };
try {
var { p0: res = false, ...tail } = { x: 1 };
throw new TypeError('\u0041');
} catch (err2) {
print(err2);
}
print(true);
var w6 = 0;
while (w6 > 0) {
w6--;
try {
print(Object.keys([1, 2]), { p10: JSON.stringify(((p, q = Infinity) => p + q)("x")) });
throw new TypeError("x");
} catch (e) {
print(e.message);
} finally {
print(Math.min({ value0: new Map() }, { x0: 0x10, p11: ((p, q = false) => p + q)(255) }), (new WeakMap() ? `t6 ${Array.from({ length: 1 }, (e, i) => i * 0.5)} end` : ((p, q = /[0-9]+/g) => p + q)(Infinity)));
}
}
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(false);
}
m0(a) {
return a + this.x;
}
}
class B extends A {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
for (let i = 0; i < 2; i++) {
for (let j = 0; j < 4; j++) {
B++;
B = [...[[String(j), (function (u) {
return u;
})(B)], Math.pow((w6) || (/[0-9]+/g), JSON.stringify(/x/i))]];
}
switch ('hello') {
case undefined:
w6 = /x/i;
break;
case undefined:
case 0:
i = Object.keys({ a: 1 });
default:
let item = new Object();
}
}
{
eval("1 + 2");
eval("var ev = 3; ev * 2");
}
