outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
var w = 0;
do {
w += 1;
} while (w < 3);
var count3 = w;
++count3;
function g(str4, obj3) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
return ((p, q = /[0-9]+/g) => p + q)((Math.abs(obj3, w)) ?? ([false, , 3]));
}
print(g(undefined, "x"));
--count3;
debugger;
