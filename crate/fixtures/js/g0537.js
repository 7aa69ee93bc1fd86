;
;
var w7 = 0;
while (w7 > 0) {
w7--;
print((function (u) {
return u;
})(Array.from({ length: 3 }, (e, i) => i * 2)));
}
print(String.raw`a${'\u0041'}b`, new Error());
w7 = new Error(0);
print(w7, ((p, q = '') => p + q)(JSON.stringify(Array.from({ length: 3 }, (e, i) => i * -1))));
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
w7 -= JSON.stringify(Object.keys({ a: 1 }));
const str6 = String(((w7) ?? (w4) ? String.raw`a${'abc'}b` : ['0', , w7]));
w4--;
for (const p of [1, 2, 3]) {
var w = 0;
do {
w += 1;
} while (w < 1);
}
