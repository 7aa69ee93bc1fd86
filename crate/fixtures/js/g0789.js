try {
print(/[0-9]+/g);
;
} catch (err) {
print(err.message);
}
print(String((function (u) {
return u;
})(0.5) === false), []);
const c5 = (Math.floor(/[0-9]+/g, [])) ?? (Math.sqrt(`t0 ${/x/i} end`, [null, , '0']));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
({ p00: [...[JSON.stringify(1), [...[c5, c5]]]], x1: Math.round(new Set(), ((p, q = /ab+c/) => p + q)(/[0-9]+/g)) });
