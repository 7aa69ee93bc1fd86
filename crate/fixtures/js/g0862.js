for (var k6 in { a: 1, b: 2 }) {
let val0 = Object.keys([1, 2]);
}
print(true);
eval("var ev = 3; ev * 2");
for (const p in { a: 1, b: 2 }) {
for (let k of 'ab') {
k = `t4 ${p} end`;
}
}
{
for (let k1 = 0; k1 < 5; k1++) {
const count0 = { length0: Object.keys({}), p11: 0 };
var w9 = 1;
while (w9 > 0) {
w9--;
k1 |= ({ x: 1, length: 2 })[(function (u) {
return u;
})(count0['\u0041'])];
}
}
print(false, (String.raw`a${~(false)}b`, ((function (u) {
return u;
})(0x10)) && (((p, q = 10) => p + q)('abc'))));
}
print('');
