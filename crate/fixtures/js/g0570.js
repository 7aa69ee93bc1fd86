const a8 = [...[String(Array.from({ length: 1 }, (e, i) => i * NaN)), (Array.from({ length: 1 }, (e, i) => i * -1)) || (((p, q = NaN) => p + q)(Infinity))]];
;
var w = 0;
while (w > 0) {
w--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
}
eval("var ev = 3; ev * 2");
w -= new Set();
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(undefined);
}
m1(a) {
return a + this.x;
}
}
print(C9.make().value);
function helper6(flag, key7) {
print(`t0 ${(function (u) {
return u;
})(w)} end`, [w.y, , [(function (u) {
return u;
})(a8)]]);
if (new.target) {
print('ctor');
}
print(arguments.length);
return String(String(C9[key7]));
}
print(helper6('\u0041', 0.5));
const x3 = Math.round(C9, new WeakMap());
