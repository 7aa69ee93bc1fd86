;
;
print([...[{ prop0: Math.min(0, 'abc'), prop1: String(false) }, ({ x: 1, length: 2 }).value]]);
;
for (var p in { a: 1, b: 2 }) {
print(new WeakMap(), [String.raw`a${p}b`]);
}
