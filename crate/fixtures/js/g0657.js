outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
var w = 1;
while (w > 0) {
w--;
w *= w;
}
var w17 = 0;
do {
w17 += 1;
} while (w17 < 4);
;
