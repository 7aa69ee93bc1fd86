(Array.from({ length: 0 }, (e, i) => i * 2) ? String((undefined ? /ab+c/ : undefined)) : new WeakMap());
print(undefined, [String.raw`a${/x/i}b`, (Array.from({ length: 0 }, (e, i) => i * 10) ? Math.pow(/ab+c/, 255) : [...['\n', '\u0041']])]);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
}
for (var k9 in { a: 1, b: 2 }) {
k9--;
}
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
var w6 = 0;
while (w6 > 0) {
w6--;
;
}
var a = (true, ((p, q = false) => p + q)(Math.pow("x", w6)));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
