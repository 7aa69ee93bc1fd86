var c = (u, v = "x") => u + v;
eval("1 + 2");
c++;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
for (const p5 in [1, 2]) {
var w = 1;
while (w > 0) {
w--;
new WeakMap();
}
}
var [y, , ...rest2] = [3, 2, 3];
var key1 = (u, v = 255) => u + v;
for (const k7 of 'ab') {
key1 |= ([Object.keys([1, 2]), c >> /x/i] ? [y.p0, , c] : Array.from({ length: 2 }, (e, i) => i * 3));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
