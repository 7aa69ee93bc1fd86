{
const b = new Date();
}
var w8 = 0;
while (w8 > 0) {
w8--;
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
}
w8 = w8;
for (let k3 = 0; k3 < 1; k3++) {
try {
switch (String.raw`a${Math.round(('0' ? true : k3), k3.length)}b`) {
case /[0-9]+/g:
--k3;
break;
case /[0-9]+/g:
case 0x10:
`t7 ${w8} end`;
default:
w8++;
}
k3++;
throw new RangeError('');
} catch (e) {
print(e);
}
((p, q = '\n') => p + q)(w8);
}
print(((p, q = 'abc') => p + q)(String(w8)));
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
++w8;
