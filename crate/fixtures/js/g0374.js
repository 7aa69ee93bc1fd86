try {
let x4 = [1, 2, 3].next;
throw new Error('abc');
} catch (ex9) {
print(ex9.message);
} finally {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
}
var z = (u, v = 255) => u + v;
try {
const b8 = ((p, q = '0') => p + q)((function (u) {
return u;
})(z) << '\u0041');
z <<= Array.from({ length: 1 }, (e, i) => i * 100);
} catch (err) {
print(err);
} finally {
print(((p, q = true) => p + q)(String.raw`a${[z, , z]}b`));
}
false;
