print(/x/i);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
function wrap(x6, c) {
const str = String.raw`a${Array.from({ length: 4 }, (e, i) => i * 1)}b`;
try {
print(Math.sqrt(((p, q = undefined) => p + q)(c), ((p, q = /ab+c/) => p + q)(str) ^ x6), Object.keys({}));
} catch (ex) {
print(ex);
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return { p00: '', y1: [void (x6), , Object.keys({})], next2: null };
}
print(wrap(/x/i, /ab+c/));
;
