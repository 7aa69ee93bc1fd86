if ((`t0 ${Object.keys([1, 2])} end`, Array.from({ length: 3 }, (e, i) => i * 255))) {
print("x", Math.pow((function (u) {
return u;
})(typeof ('')), Array.from({ length: 2 }, (e, i) => i * 255) > new Object()));
print(Object.keys({}));
} else {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
(function (u) {
return u;
})(Object.keys({ a: 1 }));
}
print('abc');
;
;
const item = (/ab+c/, Math.max(`t4 ${/[0-9]+/g} end`, String('\u0041')));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
if (`t1 ${String(item)} end`) {
new Array(10);
}
var w8 = 0;
while (w8 > 0) {
w8--;
w8++;
}
w8++;
if (String((NaN, [item]))) {
++w8;
--w8;
} else {
if ([w8.y, , (["x", 0x10]) || (0)]) {
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(null);
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
((p, q = false) => p + q)(Object.keys([1, 2]));
var res = Math.min(+(JSON.stringify(Derived)), (item.p0, Math.round(Derived, Derived)));
}
}
