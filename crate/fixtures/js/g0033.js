var w = 0;
while (w > 0) {
w--;
--w;
}
[...[new WeakMap(), w]];
let str7 = new Set();
for (var p6 in [1, 2]) {
str7 = ((p, q = false) => p + q)(new Object(0));
}
try {
w++;
} catch (ex2) {
print(ex2.message);
}
