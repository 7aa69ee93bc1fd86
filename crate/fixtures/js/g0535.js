print(/ab+c/);
var x = function* () {
yield /x/i;
yield* [1, 2];
};
x++;
try {
try {
print(x);
/[0-9]+/g;
throw new Error('hello');
} catch (ex1) {
print(ex1.message);
}
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
throw new TypeError('');
} catch (err) {
print(err.message);
}
