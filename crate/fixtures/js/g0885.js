print("x");
{
for (const k5 in [1, 2]) {
~(typeof (typeof (/ab+c/)));
}
}
var w5 = 0;
do {
w5 += 1;
} while (w5 < 3);
for (let i0 = 0; i0 < 4; i0++) {
i0 += Math.floor((function (u) {
return u;
})(Object.keys([1, 2])), { p10: (w5, w5) });
({ x: 1, length: 2 }).y;
}
print(typeof (new WeakMap()), [...[((p, q = /x/i) => p + q)(Array.from({ length: 0 }, (e, i) => i * -1)), (-(w5), { next0: 'hello', y1: w5 })]]);
;
;
var data6 = w5;
let acc0 = new Set();
--acc0;
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(0);
}
m2(a) {
return a + this.x;
}
}
print(Box.make().value);
