var w = 0;
do {
w += 1;
} while (w < 1);
print(Array.from({ length: 0 }, (e, i) => i * 0.5), [...[Math.max(`t0 ${/x/i} end`, w), Object.keys({})]]);
print(((p, q = null) => p + q)(w), String.raw`a${-(new Date())}b`);
var tmp5 = w;
