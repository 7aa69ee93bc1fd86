print(false);
eval("1 + 2");
print((function (u) {
return u;
})(+(/ab+c/)), 'a,b,c');
print('str'[`t0 ${/x/i >>> NaN} end`]);
print(/x/i);
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
print(1);
throw new RangeError('0');
} catch (ex) {
print(ex.message);
}
switch (new Date()) {
case 'hello':
var w = 0;
do {
w += 1;
} while (w < 3);
break;
case /x/i:
case 'hello':
print(Array.from({ length: 4 }, (e, i) => i * 1e3));
default:
const b6 = w.y;
}
