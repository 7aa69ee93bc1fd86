{
if (0x10) {
var w1 = 2;
while (w1 > 0) {
w1--;
w1 += w1;
}
var w = 0;
do {
w += 1;
} while (w < 2);
}
}
var w0 = 3;
while (w0 > 0) {
w0--;
w0 = Array.from({ length: 4 }, (e, i) => i * 0x10);
}
w0--;
function g() {
w0 <<= w0[[...[!(w0), ((p, q = '') => p + q)(3)]]];
;
--w0;
return [JSON.stringify(null), String(Array.from({ length: 1 }, (e, i) => i * 3))];
}
print(g());
++w0;
w0--;
var w23 = 1;
while (w23 > 0) {
w23--;
({ p10: w0 });
}
