print(new Object(0), [((0.5, true) ? String.raw`a${NaN}b` : []), , ((p, q = undefined) => p + q)('abc')]);
if (undefined) {
;
for (let i9 = 0; i9 < 4; i9++) {
for (var i = 0; i < 5; i++) {
let n = ([`t8 ${i9} end`, , Math.pow(i9, i)] ? (i9 ? i9 : i) % String('') : '\n');
print(Array.from({ length: 3 }, (e, i) => i * 1), JSON.stringify((function (u) {
return u;
})(i) == n));
}
--i9;
}
print(~(1e3), ([(function (u) {
return u;
})(3), String(Infinity), (undefined ? undefined : 1)]) && (Array.from({ length: 2 }, (e, i) => i * 0)));
}
print(/[0-9]+/g);
;
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
print(({ x: 1, length: 2 })[w1]);
