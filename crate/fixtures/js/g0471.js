outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
var w8 = 0;
do {
w8 += 1;
} while (w8 < 2);
w8++;
try {
let x = (true ? new Map() : [...[Math.pow(w8, w8), { p10: w8, x1: 1e3, p12: 0.5 }]]);
} catch (ex7) {
print(ex7);
}
