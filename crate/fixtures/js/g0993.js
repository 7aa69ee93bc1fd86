print(false);
for (let j = 0; j < 1; j++) {
print(new Set(), JSON.stringify(Math.max(j, j)) < (j.y) && (undefined));
var w = 3;
while (w > 0) {
w--;
w = [...[w[new WeakMap()], Object.keys({ a: 1 })]];
}
}
print(1e3);
print(Math.sqrt(String.raw`a${Math.max(10, /ab+c/)}b`, /ab+c/), String(Array.from({ length: 0 }, (e, i) => i * 10)));
try {
eval("var ev = 3; ev * 2");
throw new Error('');
} catch (err) {
print(err);
}
if (((p, q = null) => p + q)(Array.from({ length: 1 }, (e, i) => i * 100) < String.raw`a${true}b`)) {
;
}
print(0x10);
eval("var ev = 3; ev * 2");
try {
;
for (let k = 0; k < 4; k++) {
var w8 = 0;
do {
w8 += 1;
} while (w8 < 2);
if (String.raw`a${k.y}b`) {
print(Object.keys([1, 2]), new Array(1));
print(JSON.stringify((function (u) {
return u;
})([...['abc', /[0-9]+/g]])));
} else {
eval("var ev = 3; ev * 2");
}
}
} catch (ex) {
print(ex.message);
}
print(NaN);
