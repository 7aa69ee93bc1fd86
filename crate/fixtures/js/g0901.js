var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
[1, 2, 3].next;
print(JSON.stringify([w7['0']]));
for (let i = 0; i < 2; i++) {
var [c3, , ...rest6] = ['a,b,c', 2, 3];
var w = 1;
while (w > 0) {
w--;
print(w7);
}
}
print(w7.y, new WeakMap());
var w4 = 3;
while (w4 > 0) {
w4--;
w7--;
}
