var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
w0 -= 10;
for (const k5 in [1, 2]) {
eval("[1, 2].length");
}
Array.from({ length: 1 }, (e, i) => i * 1);
for (const p7 in [1, 2]) {
debugger;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
for (let j = 0; j < 4; j++) {
for (let p of []) {
j *= new Map();
}
if (new Object()) {
;
var acc = function (...u) {
return u.length;
};
}
}
w0 = w0;
w0++;
