for (let k = 0; k < 4; k++) {
k = [...[(function (u) {
return u;
})(String(k)), ((p, q = 1e3) => p + q)(String(k))]];
var n = k;
}
print(true);
var w = 0;
while (w > 0) {
w--;
for (let j0 = 0; j0 < 5; j0++) {
var [res, , ...rest4] = [true, 2, 3];
j0 = [[], , void (w[w])];
}
}
for (let i1 = 0; i1 < 4; i1++) {
i1 *= `t2 ${(Array.from({ length: 1 }, (e, i) => i * Infinity)) && ((function (u) {
return u;
})(i1))} end`;
;
}
