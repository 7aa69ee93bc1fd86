;
var w = 0;
do {
w += 1;
} while (w < 2);
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(100);
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
function wrap8(y8) {
function compute(key4) {
print((((p, q = /x/i) => p + q)(w == key4) ? new WeakMap() : ({ x: 1, length: 2 }).x), Array.from({ length: 2 }, (e, i) => i * 0.5));
eval("var ev = 3; ev * 2");
w += [...[new WeakMap(), Object.keys({ a: 1 })]];
return key4.x;
}
print(compute(-1));
print((w ? `t2 ${(y8, w)} end` : (Math.min(null, /[0-9]+/g)) && (Box.p0)));
w -= (w.value ? (new Array(3), '\u0041') : ((p, q = true) => p + q)({ p10: w }));
if (new.target) {
print('ctor');
}
print(arguments.length);
return new Map();
}
print(wrap8(2));
