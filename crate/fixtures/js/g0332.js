if (Array.from({ length: 4 }, (e, i) => i * -1)) {
;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue;
}
}
}
if ('str'.p0) {
[1, 2, 3][new Object()];
;
}
;
;
