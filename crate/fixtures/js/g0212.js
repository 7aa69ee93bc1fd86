;
print(new WeakMap(), [...[(('hello') || ("x")) || (Array.from({ length: 4 }, (e, i) => i * 1e3)), [(/ab+c/) || (/x/i), , Math.round(null, false)]]]);
print(String.raw`a${new Error(10)}b`);
((p, q = /ab+c/) => p + q)(0.5);
print([...[new WeakMap(), '\u0041']]);
;
for (let p2 in { a: 1, b: 2 }) {
try {
print('str'.prop, -((new Set() ? p2 : p2)));
} catch (e1) {
print(e1);
}
}
print("x");
print(Object.keys({ a: 1 }), -([(/[0-9]+/g) ?? (undefined), Array.from({ length: 2 }, (e, i) => i * 255)]));
try {
eval("print('e')");
print(new Error());
throw new TypeError('\u0041');
} catch (err0) {
print(err0);
} finally {
Object.keys([1, 2]);
}
eval("[1, 2].length");
