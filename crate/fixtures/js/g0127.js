outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
let m4 = Object.keys({});
var w = 3;
while (w > 0) {
w--;
var w5 = 0;
do {
w5 += 1;
} while (w5 < 1);
}
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
if (Object.keys([1, 2])) {
w = ~(`t7 ${null + m4} end`);
} else {
var w12 = 3;
while (w12 > 0) {
w12--;
{
new WeakMap();
eval("var ev = 3; ev * 2");
}
}
}
print(w[!(w & /ab+c/)]);
;
w = new Object(0);
{
String.raw`a${(JSON.stringify(m4), w0)}b`;
for (let k4 = 0; k4 < 3; k4++) {
var w24 = 3;
while (w24 > 0) {
w24--;
print(new Map(), `t0 ${(Array.from({ length: 4 }, (e, i) => i * 0.5) ? w0[w24] : m4)} end`);
}
eval("[1, 2].length");
}
}
var tmp1 = function* () {
yield true;
yield* [1, 2];
};
Object.keys([1, 2]);
