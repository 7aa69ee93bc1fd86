try {
var acc8 = Object.keys({ a: 1 });
;
} catch (e) {
print(e.message);
} finally {
print(Object.keys({ a: 1 }));
}
for (var k0 = 0; k0 < 1; k0++) {
if (k0[JSON.stringify('' - 1)]) {
try {
Array.from({ length: 0 }, (e, i) => i * 0);
print(~(new Set()));
throw new Error('0');
} catch (ex) {
print(ex);
}
eval("1 + 2");
}
var w1 = 0;
do {
w1 += 1;
} while (w1 < 2);
}
;
let str9 = Object.keys([1, 2]);
