{
print(3);
}
print(NaN);
print(JSON.stringify([new Error(), , { y0: '\u0041' }]));
var w1 = 0;
while (w1 > 0) {
w1--;
++w1;
}
var w8 = 3;
while (w8 > 0) {
w8--;
w8 *= w8;
}
--w8;
let c8 = String({ p00: new Set(), length1: JSON.stringify(w8) });
for (var i8 = 0; i8 < 1; i8++) {
++i8;
--c8;
}
w1 = ([w1[0x10], 1]) || (Object.keys({ a: 1 }));
{
var w = 0;
do {
w += 1;
} while (w < 3);
}
