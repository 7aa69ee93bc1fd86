if (Array.from({ length: 2 }, (e, i) => i * 10)) {
;
print(null);
;
} else {
;
}
var acc = (u, v = true) => u + v;
eval("[1, 2].length");
for (var p1 in { a: 1, b: 2 }) {
const y9 = /ab+c/;
}
print(new Set());
(((p, q = /[0-9]+/g) => p + q)(acc.p1), acc.p0);
