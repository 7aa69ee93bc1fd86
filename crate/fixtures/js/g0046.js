var w = 3;
while (w > 0) {
w--;
print([...[String(JSON.stringify('a,b,c')), Array.from({ length: 2 }, (e, i) => i * 0)]], String.raw`a${[false, , ((p, q = true) => p + q)(w)]}b`);
}
for (let i1 = 0; i1 < 2; i1++) {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
for (let i = 0; i < 5; i++) {
var w5 = 0;
do {
w5 += 1;
} while (w5 < 2);
i1--;
}
}
--w;
print(new Error());
var arr = u => {
return u;
};
print(Math.floor(String((/ab+c/) || (/x/i)), w), String([/x/i, , arr] !== arr * w));
arr--;
print('str'.prop);
