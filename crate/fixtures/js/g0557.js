({ y0: (String.raw`a${100}b` ? 255 : 255) });
print('hello');
var w = 1;
while (w > 0) {
w--;
;
}
new Array();
try {
function helper() {
w = `t7 ${w[`t4 ${w} end`]} end`;
return new Object();
}
helper();
throw new RangeError('abc');
} catch (err0) {
print(err0);
}
w++;
switch (new WeakMap()) {
case 'abc':
print(((p, q = null) => p + q)(Array.from({ length: 2 }, (e, i) => i * 10)));
break;
case 3:
case undefined:
w[(w.prop, ({ x: 1, length: 2 })[w])];
default:
w++;
}
