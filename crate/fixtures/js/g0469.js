function check9(str, b1) {
print(((p, q = 0.5) => p + q)([`t8 ${/x/i} end`, , (str) || (str)]), JSON.stringify(String.raw`a${new Date(0)}b`));
for (var k7 = 0; k7 < 3; k7++) {
k7 |= k7.length;
print(b1);
}
return new WeakMap();
}
print(check9('\n', undefined));
function run8(z4) {
eval("[1, 2].length");
if (new.target) {
print('ctor');
}
return [];
}
print(run8(/x/i));
for (var k of []) {
print(JSON.stringify(new Map()), { p10: String(JSON.stringify(/x/i)), y1: [...[k, Array.from({ length: 3 }, (e, i) => i * 1e3)]], p02: `t1 ${((p, q = true) => p + q)(/[0-9]+/g)} end` });
}
print(Object.keys([1, 2]));
var y = (u, v = NaN) => u + v;
++y;
var w = 0;
do {
w += 1;
} while (w < 4);
