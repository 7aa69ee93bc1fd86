let y0 = undefined / ((p, q = undefined) => p + q)([/x/i, , false]);
try {
eval("print('e')");
} catch (e0) {
print(e0);
} finally {
var w = 0;
do {
w += 1;
} while (w < 3);
}
++y0;
var w17 = 0;
do {
w17 += 1;
} while (w17 < 3);
w17 -= (`t3 ${null} end`, y0[y0]) >>> void (String.raw`a${null}b`);
try {
function helper8(acc2) {
acc2 &= (/ab+c/) || (acc2.p1);
print(((p, q = "x") => p + q)((String(/[0-9]+/g) ? 'str'[false] : undefined)), String((Array.from({ length: 3 }, (e, i) => i * 100) ? w17 : 'hello')));
if (new.target) {
print('ctor');
}
print(arguments.length);
return w17;
}
print(helper8('\u0041'));
throw new RangeError('\u0041');
} catch (ex19) {
print(ex19);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
--w17;
eval("1 + 2");
