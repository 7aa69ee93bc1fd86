var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
w0 |= [[[], , Array.from({ length: 3 }, (e, i) => i * Infinity)], [NaN, , ((p, q = undefined) => p + q)("x")]];
for (const k9 in [1, 2]) {
w0 *= (`t7 ${''} end` ? k9 : ((p, q = 'a,b,c') => p + q)(w0));
}
w0 = w0.y;
function helper(flag, count) {
++w0;
print(arguments.length);
return Array.from({ length: 0 }, (e, i) => i * 0x10);
}
print(helper('hello', false));
for (let j6 = 0; j6 < 1; j6++) {
w0--;
for (var j0 = 0; j0 < 1; j0++) {
j0 += [j6];
j0 = w0[j0];
}
}
;
