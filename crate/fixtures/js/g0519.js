function wrap4() {
print(/ab+c/);
for (let k = 0; k < 3; k++) {
k &= 'a,b,c';
print(k[{ y0: (k) && ('abc'), y1: { p10: k, length1: false }, p12: "x" }], k.value);
}
print('0');
if (new.target) {
print('ctor');
}
return new Error(3);
}
print(wrap4());
var w7 = 0;
do {
w7 += 1;
} while (w7 < 1);
++w7;
eval("print('e')");
var w0 = 0;
do {
w0 += 1;
} while (w0 < 2);
print(Math.abs(w0[!(undefined)], ((p, q = '') => p + q)(String.raw`a${false}b`)), [w0[w0[w0]], , new Map()]);
