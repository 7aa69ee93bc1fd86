Object.keys([1, 2]);
var w1 = 2;
while (w1 > 0) {
w1--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
}
if ((w1) || (Array.from({ length: 3 }, (e, i) => i * -1))) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
}
w1 = Math.sqrt({ next0: (w1, true), next1: (function (u) {
return u;
})(w1), next2: '' }, 1e3);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
print('abc');
print("x", ([{ length0: w1, value1: w1 }, String.raw`a${w1}b`], { x0: ((p, q = false) => p + q)(false), x1: w1.next }));
