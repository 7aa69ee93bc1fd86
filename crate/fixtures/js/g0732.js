print(/x/i, !(Array.from({ length: 4 }, (e, i) => i * Infinity)));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
print(Infinity);
;
eval("var ev = 3; ev * 2");
var w = 3;
while (w > 0) {
w--;
Object.keys([1, 2]);
}
Object.keys({ a: 1 });
