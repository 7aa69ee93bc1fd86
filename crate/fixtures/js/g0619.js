var arr = (u, v = undefined) => u + v;
{
print((+(/ab+c/) % `t6 ${/x/i} end`, arr.p0));
if (NaN) {
print(new Object(), JSON.stringify(`t7 ${('\n', arr)} end`));
var w = 0;
do {
w += 1;
} while (w < 3);
for (const k3 in [1, 2]) {
arr |= Array.from({ length: 3 }, (e, i) => i * 100);
}
} else {
arr--;
}
}
--arr;
var w14 = 2;
while (w14 > 0) {
w14--;
;
}
