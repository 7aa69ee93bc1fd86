;
try {
;
} catch (err9) {
print(err9.message);
}
print('hello');
var w = 0;
do {
w += 1;
} while (w < 1);
