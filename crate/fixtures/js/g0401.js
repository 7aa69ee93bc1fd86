outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
print(Math.sqrt('str'[({ x: 1, length: 2 }).y], Object.keys({ a: 1 })));
try {
print(100);
throw new TypeError('abc');
} catch (e) {
print(e.message);
}
;
for (let k3 in [1, 2]) {
eval("print('e')");
}
