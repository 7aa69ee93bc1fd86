eval("var ev = 3; ev * 2");
for (let i = 0; i < 3; i++) {
eval("[1, 2].length");
print(Array.from({ length: 0 }, (e, i) => i * 0x10));
}
(new Object(), ({ x: 1, length: 2 }).value);
var obj9 = new WeakMap();
try {
switch (new Map()) {
case 'hello':
eval("print('e')");
break;
case false:
case undefined:
2;
default:
obj9 *= (((p, q = '0') => p + q)(('hello', /ab+c/)) ? obj9 : +(obj9[obj9]));
}
throw new Error('hello');
} catch (e) {
print(e);
}
obj9++;
obj9 = [Object.keys([1, 2]), new Map(), []];
eval("var ev = 3; ev * 2");
var w6 = 0;
do {
w6 += 1;
} while (w6 < 1);
eval("var ev = 3; ev * 2");
