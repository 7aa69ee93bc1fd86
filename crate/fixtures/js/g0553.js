print(Array.from({ length: 0 }, (e, i) => i * 100), ({ prop0: /[0-9]+/g, p01: undefined, prop2: 10 }) ?? (/ab+c/));
var w8 = 0;
do {
w8 += 1;
} while (w8 < 3);
eval("print('e')");
var a = (u, v = false) => u + v;
try {
for (let k = 0; k < 2; k++) {
eval("[1, 2].length");
('abc', ([1, 2, 3].value ? Math.floor("x", k) : undefined));
}
throw new TypeError('a,b,c');
} catch (err) {
print(err);
}
