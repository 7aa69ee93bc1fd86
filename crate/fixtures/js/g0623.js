for (var k of []) {
eval("[1, 2].length");
}
var w1 = 0;
do {
w1 += 1;
} while (w1 < 3);
w1--;
var w = 0;
do {
w += 1;
} while (w < 4);
try {
w1 = JSON.stringify(new Object());
throw new TypeError('');
} catch (ex) {
print(ex.message);
}
w1 = [1, 2, 3][w1];
for (var p of []) {
eval("[1, 2].length");
}
w = w1;
['0', , { value0: `t0 ${w1} end`, y1: new Object(), length2: /ab+c/ }];
var w68 = 3;
while (w68 > 0) {
w68--;
(`t0 ${`t0 ${w68} end`} end`) ?? (`t1 ${String.raw`a${10}b`} end`);
}
