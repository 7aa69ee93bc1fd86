var w1 = 0;
do {
w1 += 1;
} while (w1 < 2);
`t2 ${Object.keys([1, 2])} end`;
if (((String.raw`a${false}b`, new Date(10)), ((p, q = true) => p + q)(new Map()))) {
;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
