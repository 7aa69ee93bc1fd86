eval("print('e')");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
print(3);
let arr9 = Array.from({ length: 3 }, (e, i) => i * NaN);
