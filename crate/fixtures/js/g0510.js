print(~({ prop0: 'abc', y1: ((p, q = 10) => p + q)(/[0-9]+/g), y2: false }), ((p, q = false) => p + q)(3));
print(null);
print('a,b,c');
var key8 = Array.from({ length: 1 }, (e, i) => i * 255);
eval("1 + 2");
{
for (var k in [1, 2]) {
switch (Object.keys({ a: 1 })) {
case undefined:
key8--;
break;
case /ab+c/:
case '\n':
[...[JSON.stringify(new Set()), [...[[key8, , 'abc'], [k, null, key8]]]]];
default:
k *= (function (u) {
return u;
})(({ x: 1, length: 2 })[((p, q = 0.5) => p + q)(k)]);
}
}
[...[~(new Set()), [1, 2, 3].length]];
}
