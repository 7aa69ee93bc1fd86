print(/[0-9]+/g);
eval("var ev = 3; ev * 2");
for (var i0 = 0; i0 < 4; i0++) {
var [n, , ...tail] = [true, 2, 3];
for (var p of [1, 2, 3]) {
print(String.raw`a${true}b` != (i0) && (0.5) % ((p) ?? (p)) || ((/x/i ? 'hello' : /[0-9]+/g)), !([...[String.raw`a${100}b`, Array.from({ length: 4 }, (e, i) => i * NaN)]]));
}
}
for (var p4 of [1, 2, 3]) {
p4 |= p4;
}
for (let i = 0; i < 2; i++) {
Object.keys({});
i = (({ x: 1, length: 2 }).length) || (/ab+c/);
}
;
print(new Map(), JSON.stringify(new Object()));
print([1, 2, 3].y);
;
;
if (new Set()) {
var z4 = !(3);
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
try {
print({ y0: String.raw`a${[...[255, undefined]]}b`, p11: [] });
throw new Error('');
} catch (e) {
print(e);
}
} else {
;
var w = 0;
while (w > 0) {
w--;
w = new Set();
}
}
