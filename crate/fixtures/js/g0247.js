var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
var [val, , ...tail6] = [NaN, 2, 3];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
try {
for (var k5 = 0; k5 < 4; k5++) {
for (var j5 = 0; j5 < 4; j5++) {
k5 *= Array.from({ length: 2 }, (e, i) => i * 255);
j5 |= { prop0: (w4 ? Math.sqrt('0', k5) : new Set()), p01: k5.p0 };
}
w4--;
}
throw new RangeError('');
} catch (ex0) {
print(ex0.message);
} finally {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
}
