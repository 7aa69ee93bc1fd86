;
var m = /ab+c/;
m = ([...[{ p00: m }, new Map()]]) || (Array.from({ length: 4 }, (e, i) => i * 255));
const arr = ((p, q = 100) => p + q)(new Error(10));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
if (m) {
m = String.raw`a${[]}b`;
}
