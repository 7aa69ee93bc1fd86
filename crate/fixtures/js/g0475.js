outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
String.raw`a${JSON.stringify(String.raw`a${/ab+c/}b`)}b`;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
print(({ p10: ('\u0041') ?? (/ab+c/), p01: `t1 ${'abc'} end` } ? String(`t6 ${false} end`) : Math.max(((p, q = /[0-9]+/g) => p + q)(1), String.raw`a${''}b`)), 2);
print(false, `t5 ${'abc'} end`);
;
try {
var w = 0;
do {
w += 1;
} while (w < 1);
throw new Error('0');
} catch (err0) {
print(err0);
}
[...[true, ((p, q = undefined) => p + q)(null) != Array.from({ length: 4 }, (e, i) => i * -1)]];
print(/ab+c/);
;
