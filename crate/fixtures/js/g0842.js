eval("[1, 2].length");
var w7 = 3;
while (w7 > 0) {
w7--;
var w = 0;
do {
w += 1;
} while (w < 3);
}
w7 = w7;
for (let j2 = 0; j2 < 4; j2++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
for (var i = 0; i < 5; i++) {
({ x: 1, length: 2 }).y;
;
}
}
