try {
print(/x/i, JSON.stringify(3));
throw new RangeError('');
} catch (e3) {
print(e3.message);
}
try {
;
var w0 = 2;
while (w0 > 0) {
w0--;
w0 = Math.round((function (u) {
return u;
})(w0), ((p, q = '0') => p + q)([...[undefined, 0x10]]));
}
throw new Error("x");
} catch (err4) {
print(err4);
}
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('');
}
m0(a) {
return a + this.x;
}
}
class Point4 extends Derived {
constructor() {
super(1e3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point4().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/x/i);
}
m1(a) {
return a + this.x;
}
}
class Box9 extends C {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box9().value);
{
new WeakMap() < [];
var w = 0;
do {
w += 1;
} while (w < 2);
}
print(Object.keys({}));
print([...[JSON.stringify((/ab+c/, null)), Point4.value]], JSON.stringify(Math.abs(null, /x/i) <= (function (u) {
return u;
})(Derived)));
;
