print(((p, q = /[0-9]+/g) => p + q)(Math.min((100) && (/[0-9]+/g), `t3 ${/[0-9]+/g} end`)));
var w2 = 2;
while (w2 > 0) {
w2--;
--w2;
}
w2 -= JSON.stringify((w2 ? null : w2)) | String(w2) & [...[1e3, 100]];
const res2 = [...[((p, q = /[0-9]+/g) => p + q)(({ x: 1, length: 2 }).value), [...[w2.y, new Set()]]]];
