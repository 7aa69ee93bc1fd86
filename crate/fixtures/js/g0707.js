let val = ((function (u) {
return u;
})([true, /x/i]) ? Array.from({ length: 4 }, (e, i) => i * 100) : String.raw`a${3}b`);
var w5 = 1;
while (w5 > 0) {
w5--;
val *= Math.sqrt(Infinity, val >>> /ab+c/) > ([...[val, val]]) || (/[0-9]+/g);
}
print(val);
for (var i = 0; i < 3; i++) {
if (Math.min([val, (function (u) {
return u;
})(/[0-9]+/g)], i)) {
var w = 0;
while (w > 0) {
w--;
print(null);
}
} else {
var acc = function (...u) {
return u.length;
};
class Base1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base1(true);
}
m0(a) {
return a + this.x;
}
}
print(Base1.make().value);
}
eval("1 + 2");
}
;
function make(n6) {
[(n6[1], 'a,b,c'), , Object.keys([1, 2])];
try {
;
++val;
throw new RangeError("x");
} catch (e) {
print(e.message);
} finally {
print(val.p0, +((`t8 ${n6} end`) ?? (255)));
}
if (new.target) {
print('ctor');
}
return new Set();
}
print(make(3));
const tmp4 = ((p, q = /ab+c/) => p + q)(String.raw`a${make(val, 0x10)}b`);
;
