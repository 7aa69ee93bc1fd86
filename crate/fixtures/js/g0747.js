;
[];
var w7 = 2;
while (w7 > 0) {
w7--;
w7 = [...[w7[w7[w7]], w7[w7] - w7 | 'a,b,c']];
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
--w7;
eval("1 + 2");
print(`t2 ${new Date()} end`, (function (u) {
return u;
})(Array.from({ length: 3 }, (e, i) => i * 3)));
if (new Set()) {
w7 = w7[new Set() / (w7) && (w7)];
for (var p of 'ab') {
JSON.stringify(((p, q = /ab+c/) => p + q)((function (u) {
return u;
})(w7)));
}
w7;
} else {
const x5 = w7[0.5 * w7 != JSON.stringify(w7)];
print(String.raw`a${-({ p10: null })}b`, { x0: /ab+c/, length1: (x5 >= w7, String.raw`a${w7}b`) });
}
