let y5 = String.raw`a${Math.round(Math.sqrt(/x/i, /ab+c/), ((p, q = -1) => p + q)("x"))}b`;
print(y5, Array.from({ length: 1 }, (e, i) => i * -1));
print(Object.keys({ a: 1 }));
var tmp4 = function* () {
yield null;
yield* [1, 2];
};
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
if (`t4 ${[...[[y5], JSON.stringify(tmp4)]]} end`) {
function run(z6, x1) {
--x1;
x1++;
eval("[1, 2].length");
return new Date();
}
run(/ab+c/, 0.5);
}
for (let p2 of [1, 2, 3]) {
tmp4++;
}
