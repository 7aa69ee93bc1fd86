if (Math.sqrt([...['0', /ab+c/]] > ['hello', , undefined], ({ x: 1, length: 2 }).y)) {
print(((p, q = false) => p + q)(0));
print('0');
} else {
var w = 0;
do {
w += 1;
} while (w < 2);
var { next: c4 = false, ...rest } = { x: 1 };
}
var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
var [count0, , ...tail] = [3, 2, 3];
try {
count0 = [];
} catch (err) {
print(err);
}
