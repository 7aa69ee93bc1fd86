;
print('\n');
const z = String.raw`a${(-(/ab+c/) ? [null] : [...['abc', 255]])}b`;
Object.keys({ a: 1 }) === new Date();
eval("1 + 2");
print(/[0-9]+/g);
try {
print(true);
print((new WeakMap() ? { prop0: z, y1: 'abc', p12: NaN } === (z) ?? (z) : false), String(Math.min(Array.from({ length: 0 }, (e, i) => i * 3), Array.from({ length: 0 }, (e, i) => i * 100))));
} catch (ex) {
print(ex.message);
} finally {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
}
for (var i4 = 0; i4 < 5; i4++) {
i4 += String(new Set());
const obj = new Date();
}
;
try {
;
eval("var ev = 3; ev * 2");
} catch (e) {
print(e);
}
