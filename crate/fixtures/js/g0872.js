;
for (const k of [1, 2, 3]) {
print(((p, q = /ab+c/) => p + q)(Object.keys({}) | Object.keys({ a: 1 })));
}
;
const z = Object.keys({});
print([...[[null << z, , (function (u) {
return u;
})(z)], Object.keys({})]], Array.from({ length: 2 }, (e, i) => i * NaN));
for (var p6 in [1, 2]) {
for (let j = 0; j < 2; j++) {
for (let k4 = 0; k4 < 2; k4++) {
eval("print('e')");
p6 &= String.raw`a${{ y0: j['a,b,c'], next1: JSON.stringify(null), value2: z & k4 }}b`;
}
if (Array.from({ length: 3 }, (e, i) => i * 2)) {
p6++;
} else {
;
j--;
}
}
}
;
