var c = Object.keys({ a: 1 });
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
var w = 1;
while (w > 0) {
w--;
var obj4 = [/x/i, , new Map()];
}
w++;
print('abc');
