for (const p1 in [1, 2]) {
print(true);
}
var w = 0;
do {
w += 1;
} while (w < 3);
var w27 = 0;
do {
w27 += 1;
} while (w27 < 2);
;
const res8 = w27.p0;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
switch (w27) {
case undefined:
w <<= Array.from({ length: 0 }, (e, i) => i * 1);
break;
case /[0-9]+/g:
case /ab+c/:
let str0 = Array.from({ length: 2 }, (e, i) => i * -1);
default:
eval("1 + 2");
}
