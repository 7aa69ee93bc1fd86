for (var j = 0; j < 2; j++) {
var w = 0;
do {
w += 1;
} while (w < 1);
w = [...[2, j[typeof (w)]]];
}
;
print(true);
;
print(({ x: 1, length: 2 }).value);
for (let k5 of []) {
k5 *= [{ value0: (k5 ? true : k5) }, , Object.keys({ a: 1 })];
}
