var c0 = function* () {
yield 100;
yield* [1, 2];
};
print(String.raw`a${!(null)}b` !== (function (u) {
return u;
})((function (u) {
return u;
})(false)), typeof (((p, q = null) => p + q)(typeof (c0))));
if (c0) {
var w1 = 1;
while (w1 > 0) {
w1--;
({ prop0: ((p, q = undefined) => p + q)(Math.pow(c0, w1)) });
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
