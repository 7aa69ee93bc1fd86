try {
print('abc');
;
} catch (err7) {
print(err7);
}
var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
{
if ((new Array(), (/[0-9]+/g << w6, String.raw`a${NaN}b`))) {
function make(flag, z) {
print(Array.from({ length: 1 }, (e, i) => i * Infinity));
flag--;
w6 |= /[0-9]+/g;
return NaN;
}
print(make('\n', 1));
} else {
w6 = 'str'[new Array()];
print(String.raw`a${(((p, q = 10) => p + q)(w6), [...[w6, w6]])}b`);
}
}
w6;
;
var w = 0;
do {
w += 1;
} while (w < 3);
