;
var w = 0;
do {
w += 1;
} while (w < 4);
function test(tmp) {
var w15 = 0;
do {
w15 += 1;
} while (w15 < 1);
eval("var ev = 3; ev * 2");
print(arguments.length);
return [...[[...[JSON.stringify(tmp), void ("x")]], JSON.stringify(Array.from({ length: 3 }, (e, i) => i * -1))]];
}
test(undefined);
print(w);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
--w;
try {
w = Object.keys({ a: 1 });
} catch (err3) {
print(err3.message);
}
[[(0 ? '0' : w), !(3)], , w];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
if (w[(Array.from({ length: 0 }, (e, i) => i * NaN) ? `t2 ${w} end` : String(w))]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
var w2 = 1;
while (w2 > 0) {
w2--;
print(`t7 ${String(w2)} end`);
}
} else {
print(JSON.stringify(`t6 ${(function (u) {
return u;
})(w)} end`));
}
var b8 = w;
