var [m5, , ...tail] = [undefined, 2, 3];
var w = 0;
while (w > 0) {
w--;
for (var k = 0; k < 1; k++) {
eval("[1, 2].length");
{
w += [{ p00: [1, 2, 3].value, p11: new WeakMap(), next2: k[w] }, , String.raw`a${String.raw`a${w}b`}b`];
}
}
}
m5++;
var w4 = 0;
do {
w4 += 1;
} while (w4 < 2);
