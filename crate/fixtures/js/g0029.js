print(-1);
for (var j = 0; j < 5; j++) {
String.raw`a${[Infinity, NaN] > (j) && (j)}b`;
eval("[1, 2].length");
}
print(/x/i);
eval("var ev = 3; ev * 2");
eval("[1, 2].length");
for (var i2 = 0; i2 < 1; i2++) {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
i2 &= (((p, q = /x/i) => p + q)((true ? 'hello' : w0)), JSON.stringify([true, 10, /[0-9]+/g]));
}
var w = 0;
while (w > 0) {
w--;
print(`t6 ${/x/i} end`);
}
var a6 = { w, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
print(new Set());
