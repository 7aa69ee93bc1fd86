print((function (u) {
return u;
})(1e3), Array.from({ length: 4 }, (e, i) => i * 0x10));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
eval("var ev = 3; ev * 2");
var acc2 = function* () {
yield 'a,b,c';
yield* [1, 2];
};
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
var w8 = 2;
while (w8 > 0) {
w8--;
print(([1, 2, 3][acc2] >> JSON.stringify(w8)) ?? ((JSON.stringify(true), (acc2, w8))), [...[[["x", acc2, undefined], , ('hello', 'abc')], { prop0: Object.keys({}), p01: String(undefined), p12: JSON.stringify(w8) }]]);
}
