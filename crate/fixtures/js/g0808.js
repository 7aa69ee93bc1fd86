;
eval("print('e')");
for (let p9 of []) {
{
var w3 = 3;
while (w3 > 0) {
w3--;
w3 -= { p00: `t3 ${(p9, 0)} end` };
}
}
}
debugger;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
print(/[0-9]+/g);
var count9 = [1, 2, 3].x;
