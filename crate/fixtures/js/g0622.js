outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
print(false);
;
let data2 = [[10, , (255) || (/[0-9]+/g)], (('\n', 'hello')) || (new WeakMap())];
