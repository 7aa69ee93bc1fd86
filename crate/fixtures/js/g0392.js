print(Object.keys({ a: 1 }));
;
try {
var w1 = 1;
while (w1 > 0) {
w1--;
var w = 0;
while (w > 0) {
w--;
print(~([1, 2, 3].p0));
}
}
} catch (e) {
print(e);
}
((p, q = 255) => p + q)(/ab+c/);
for (const p in { a: 1, b: 2 }) {
print(2);
}
switch ([1, 2, 3][Object.keys({ a: 1 })]) {
case -1:
print(/x/i);
break;
case Infinity:
case false:
String([]);
default:
print(/ab+c/);
}
for (var k0 of []) {
print(k0, `t2 ${{ next0: +(k0), y1: JSON.stringify('abc'), next2: k0.p0 }} end`);
}
