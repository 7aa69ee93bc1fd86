eval("var ev = 3; ev * 2");
try {
let b = ((p, q = 0x10) => p + q)(1);
!(JSON.stringify(/[0-9]+/g));
throw new RangeError('\n');
} catch (err1) {
print(err1.message);
} finally {
print('abc');
}
var w = 0;
while (w > 0) {
w--;
new Date(1) <= w.y;
}
'\u0041';
for (let i6 = 0; i6 < 1; i6++) {
for (var p2 of []) {
i6 = [1, 2, 3][+((false) ?? (i6))];
}
function f() {
w--;
--w;
print({ length0: Array.from({ length: 0 }, (e, i) => i * 1), next1: `t1 ${new Set()} end`, p12: Math.sqrt(((p, q = 'abc') => p + q)(/x/i), false !== undefined) }, ((p, q = 0) => p + q)(Object.keys([1, 2])));
if (new.target) {
print('ctor');
}
return `t8 ${i6.next} end`;
}
print(f());
}
