;
for (var p of [1, 2, 3]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
}
;
;
const tmp = new Date(1);
try {
print(false);
throw new Error('a,b,c');
} catch (e) {
print(e.message);
} finally {
print(NaN);
}
;
