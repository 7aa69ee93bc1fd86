print(/ab+c/);
print(0x10);
for (const k6 in { a: 1, b: 2 }) {
var w8 = 0;
while (w8 > 0) {
w8--;
eval("print('e')");
}
}
({ x: 1, length: 2 }).next;
try {
;
} catch (err) {
print(err.message);
}
var w = 0;
do {
w += 1;
} while (w < 4);
;
w -= String(100);
