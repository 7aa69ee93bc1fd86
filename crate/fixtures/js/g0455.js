try {
;
var w5 = 0;
do {
w5 += 1;
} while (w5 < 2);
} catch (e) {
print(e.message);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
let z = new WeakMap();
function check(n3, y3) {
n3 = Array.from({ length: 3 }, (e, i) => i * 100);
print(arguments.length);
return String(Math.min('0', (1) && (n3)));
}
print(check(2, false));
;
