try {
function helper(z4, n1) {
print(String((((p, q = 255) => p + q)(10), { length0: false, length1: undefined })));
eval("print('e')");
if (new.target) {
print('ctor');
}
return z4;
}
helper(/ab+c/, "x");
} catch (e3) {
print(e3);
} finally {
var w = 0;
do {
w += 1;
} while (w < 3);
}
print(Object.keys([1, 2]));
;
function h(acc9, count9) {
class Box8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box8('');
}
m2(a) {
return a + this.x;
}
}
print(Box8.make().value);
return new Date(1);
}
print(h(0, /[0-9]+/g));
var w2 = 0;
do {
w2 += 1;
} while (w2 < 4);
w2 <<= Array.from({ length: 0 }, (e, i) => i * 0.5);
--w2;
print(new Set(), JSON.stringify(((p, q = true) => p + q)(Array.from({ length: 4 }, (e, i) => i * 0.5))));
for (var k5 in [1, 2]) {
let res7 = { x0: k5[`t5 ${w2} end`], p11: ([...[-1, k5]], (function (u) {
return u;
})(k5)), next2: ((p, q = undefined) => p + q)({ y0: k5, next1: 3 }) };
}
(w2[[w2, /x/i, /ab+c/]], Math.round({ p10: '\n' }, String.raw`a${"x"}b`));
