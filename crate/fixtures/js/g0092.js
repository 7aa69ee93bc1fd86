;
print(/ab+c/);
var w = 0;
do {
w += 1;
} while (w < 1);
print([(function (u) {
return u;
})((/ab+c/, w)), Math.min(+(Infinity), 'a,b,c')], `t7 ${(Array.from({ length: 3 }, (e, i) => i * -1), { next0: w, value1: NaN, p02: /x/i })} end`);
var y5 = [(w) ?? (w) !== String.raw`a${/ab+c/}b`, , Array.from({ length: 2 }, (e, i) => i * 1)];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
--w;
w++;
let flag0 = `t8 ${JSON.stringify([y5, , NaN])} end`;
eval("var ev = 3; ev * 2");
