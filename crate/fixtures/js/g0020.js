;
var w = 0;
do {
w += 1;
} while (w < 3);
(w.prop, ({ x: 1, length: 2 })[Array.from({ length: 0 }, (e, i) => i * 0.5)]);
try {
print([...[w, { p10: Array.from({ length: 0 }, (e, i) => i * NaN), y1: Array.from({ length: 0 }, (e, i) => i * -1) }]], w);
switch (typeof ((w) ?? (/x/i) * (w, 'abc'))) {
case /[0-9]+/g:
++w;
break;
case 'a,b,c':
case /ab+c/:
--w;
default:
w--;
}
throw new TypeError('hello');
} catch (e) {
print(e.message);
}
