;
;
var obj = function (...u) {
return u.length;
};
print([true, , obj[Math.floor(obj, obj)]], obj);
class C3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C3('0');
}
m0(a) {
return a + this.x;
}
}
class Point5 extends C3 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point5().value);
var arr3 = function* () {
yield true;
yield* [1, 2];
};
var w5 = 3;
while (w5 > 0) {
w5--;
function f() {
++w5;
C3 &= w5;
print(arguments.length);
return Object.keys({});
}
print(f());
}
print([[Array.from({ length: 2 }, (e, i) => i * 0), , (obj) && (0x10)], , (Math.floor(false, /[0-9]+/g) ? arr3 >>> obj : [/x/i, , 1e3])]);
let res = (Array.from({ length: 1 }, (e, i) => i * 0x10) | Point5.y ? [Array.from({ length: 4 }, (e, i) => i * 3), , [true, , NaN]] : new Set());
try {
{
var w = 0;
do {
w += 1;
} while (w < 1);
Point5 -= (typeof ({ p00: Point5 })) || (~(w5));
}
obj--;
throw new RangeError("x");
} catch (e) {
print(e);
}
C3 += Math.floor([1, 2, 3].p1, new WeakMap());
