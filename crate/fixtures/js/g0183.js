if (~(`t4 ${Array.from({ length: 0 }, (e, i) => i * 0)} end`)) {
{
print(((p, q = /x/i) => p + q)(/ab+c/));
}
} else {
var str2 = !(({ x: 1, length: 2 })[(function (u) {
return u;
})(null)]);
for (const p4 of 'ab') {
Array.from({ length: 2 }, (e, i) => i * 0.5);
}
}
eval("var ev = 3; ev * 2");
for (var k1 = 0; k1 < 2; k1++) {
var w1 = 2;
while (w1 > 0) {
w1--;
var w5 = 3;
while (w5 > 0) {
w5--;
var item6 = w5[w1[true]];
}
}
w1 *= [new Array()];
}
try {
print('');
throw new Error('0');
} catch (err) {
print(err.message);
}
