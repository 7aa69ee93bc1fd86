try {
var w = 2;
while (w > 0) {
w--;
w += new WeakMap();
}
} catch (ex) {
print(ex);
} finally {
;
}
;
print(new Object());
function run1(y, val1) {
for (var k in [1, 2]) {
val1 = `t3 ${new WeakMap()} end`;
}
var w11 = 0;
do {
w11 += 1;
} while (w11 < 4);
return (Object.keys([1, 2]) ? String(String.raw`a${val1}b`) : +(w11[undefined]));
}
run1(255, true);
;
function make() {
print(/[0-9]+/g);
;
return [new Set(), , ~(Object.keys({ a: 1 }))];
}
print(make());
undefined;
print(Array.from({ length: 2 }, (e, i) => i * 255));
