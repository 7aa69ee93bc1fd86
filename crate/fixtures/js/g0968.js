print({ prop0: ([/x/i, , 'hello'] ? JSON.stringify(10) : (0, '0')) });
print(({ p00: [/[0-9]+/g] }, `t5 ${`t3 ${null} end`} end`), { length0: ((p, q = -1) => p + q)(`t0 ${0.5} end`), next1: [] });
if (((p, q = 0.5) => p + q)({ y0: [false, , /ab+c/], x1: ((p, q = null) => p + q)(undefined) })) {
try {
var [data6, , ...rest0] = [-1, 2, 3];
throw new Error('\n');
} catch (ex) {
print(ex.message);
}
}
if (({ x: 1, length: 2 }).y) {
print(+(`t2 ${((p, q = 'abc') => p + q)(undefined)} end`), !(Array.from({ length: 0 }, (e, i) => i * 0x10)));
eval("[1, 2].length");
} else {
;
let m6 = String(String.raw`a${!(1e3)}b`);
}
class Base6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base6(0);
}
m2(a) {
return a + this.x;
}
}
print(Base6.make().value);
Base6++;
--Base6;
