let obj3 = new WeakMap();
var w = 3;
while (w > 0) {
w--;
print(true);
}
print(Object.keys({}), new Array(3));
--w;
obj3 &= new Array(0);
var w3 = 0;
while (w3 > 0) {
w3--;
try {
var w8 = 2;
while (w8 > 0) {
w8--;
print(w.next);
}
for (let i = 0; i < 4; i++) {
++w3;
w3 <<= [...[-(w3 < w), Array.from({ length: 4 }, (e, i) => i * 3)]];
}
throw new Error('\n');
} catch (ex4) {
print(ex4);
}
}
