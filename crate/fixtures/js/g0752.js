for (const p0 of []) {
eval("var ev = 3; ev * 2");
}
var a = function* () {
yield /ab+c/;
yield* [1, 2];
};
let x7 = (((p, q = null) => p + q)((a ? a : /[0-9]+/g)), a);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
