for (const p1 in [1, 2]) {
print([]);
}
{
try {
print(100);
} catch (e9) {
print(e9);
}
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
}
print(3);
var w = 0;
do {
w += 1;
} while (w < 1);
