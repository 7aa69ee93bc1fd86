;
;
let n = [...[((3, 2) ? `t6 ${true} end` : [1, 2, 3]['\u0041']), 'str'.p0]];
for (let p2 of 'ab') {
const c6 = [(Array.from({ length: 4 }, (e, i) => i * 1), n), , String.raw`a${[...['a,b,c', n]]}b`];
}
(String(Array.from({ length: 0 }, (e, i) => i * NaN)) ? String(((p, q = 2) => p + q)(n)) : n);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
n = ~(((n, /[0-9]+/g)) && ([undefined, , n]));
n++;
try {
const b1 = new Map();
throw new RangeError('hello');
} catch (e) {
print(e.message);
} finally {
--n;
}
