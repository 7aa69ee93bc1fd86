eval("1 + 2");
{
;
}
var w = 0;
while (w > 0) {
w--;
w = ((p, q = undefined) => p + q)((false ? (w, w) : w));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
