var arr = new Object(1);
for (let k8 = 0; k8 < 3; k8++) {
print((k8, String.raw`a${new WeakMap()}b`), ((p, q = /ab+c/) => p + q)(void ([])));
print(Array.from({ length: 1 }, (e, i) => i * 1e3), (arr) || (String.raw`a${{ p00: 2, next1: k8 }}b`));
}
try {
Math.min([...[arr | arr, 'str'[arr]]], JSON.stringify((undefined) || (arr)));
} catch (e) {
print(e.message);
}
var w0 = 2;
while (w0 > 0) {
w0--;
w0 = 'str'[JSON.stringify((arr) ?? (w0))];
}
