const x1 = ((p, q = /x/i) => p + q)(String.raw`a${'\n'}b`);
if ((new Map() ? new Set() : '\n')) {
print(x1);
}
for (let p2 of [1, 2, 3]) {
p2 = 'abc';
}
if ({ p10: `t3 ${[x1, x1]} end`, y1: x1, y2: new WeakMap() }) {
print(void ([String.raw`a${0.5}b`, , JSON.stringify(3)]), new Error(1));
print(true);
;
}
;
switch (String(Array.from({ length: 1 }, (e, i) => i * 1e3))) {
case /ab+c/:
let y9 = (x1.p0 ? String((x1) || (NaN)) : new WeakMap());
break;
case true:
case /x/i:
-1;
default:
y9 = new Map();
}
;
eval("var ev = 3; ev * 2");
for (let i2 = 0; i2 < 3; i2++) {
function test7(y, res) {
++i2;
return true;
}
print(test7(/x/i, /ab+c/));
--i2;
}
