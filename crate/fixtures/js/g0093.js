;
eval("print('e')");
print(new Date());
try {
var w9 = 0;
do {
w9 += 1;
} while (w9 < 1);
} catch (err5) {
print(err5.message);
}
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
;
if (2) {
print(/x/i);
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
} else {
;
}
