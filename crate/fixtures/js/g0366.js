;
var [obj, , ...tail0] = [-1, 2, 3];
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
let y8 = { p10: new WeakMap() };
var w6 = 2;
while (w6 > 0) {
w6--;
class B3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B3(10);
}
m0(a) {
return a + this.x;
}
}
print(B3.make().value);
}
w1 <<= w1[(String.raw`a${w6}b` ? { x0: w1, x1: w1 } : `t4 ${y8} end`)];
print(Object.keys([1, 2]));
w6 |= w1.p0 & ((p, q = null) => p + q)([y8, w1, /x/i]);
for (var k5 in [1, 2]) {
w1 = ((Array.from({ length: 4 }, (e, i) => i * 0x10) ? String(1) : (function (u) {
return u;
})(w1)) ? `t4 ${Math.sqrt(w1, y8)} end` : typeof (w6));
}
