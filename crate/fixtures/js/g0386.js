try {
let m = String.raw`a${[-1, , '0']}b` >>> ((p, q = /ab+c/) => p + q)(false);
m[m];
throw new Error('hello');
} catch (err2) {
print(err2.message);
}
var w = 0;
do {
w += 1;
} while (w < 2);
for (const k5 in [1, 2]) {
{
((false, ({ x: 1, length: 2 })[undefined])) && (w);
}
}
for (var p of [1, 2, 3]) {
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
}
++w;
