eval("var ev = 3; ev * 2");
if (({ x: 1, length: 2 })[(function (u) {
return u;
})(String(null))]) {
{
try {
;
var y1 = (Math.min(false, Math.pow('\n', 0)) ? ((p, q = null) => p + q)(Array.from({ length: 2 }, (e, i) => i * 2)) : 'str'[{ next0: true, prop1: undefined, p12: /[0-9]+/g }]);
throw new RangeError('0');
} catch (ex2) {
print(ex2);
}
}
}
print((Object.keys({})) ?? (Array.from({ length: 0 }, (e, i) => i * 255)));
print(new Set(), ({ x: 1, length: 2 }).y);
var w2 = 0;
do {
w2 += 1;
} while (w2 < 1);
var w8 = 1;
while (w8 > 0) {
w8--;
var w = 1;
while (w > 0) {
w--;
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue;
}
}
}
}
print([...[(function (u) {
return u;
})(w8[null]), new Array(3)]]);
eval("print('e')");
w2 &= [...[{ next0: (w8) || (3), next1: { prop0: false }, prop2: (255 ? w2 : w8) }, (String(undefined)) && ('hello')]];
++w8;
