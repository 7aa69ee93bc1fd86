var w = 1;
while (w > 0) {
w--;
eval("[1, 2].length");
}
try {
w = String(Array.from({ length: 0 }, (e, i) => i * 2));
w |= Array.from({ length: 3 }, (e, i) => i * 0.5);
} catch (err2) {
print(err2);
}
try {
for (let k8 in { a: 1, b: 2 }) {
++k8;
}
} catch (ex) {
print(ex.message);
}
for (var i2 = 0; i2 < 3; i2++) {
i2++;
let item7 = [String(w), , ((p, q = /x/i) => p + q)(Math.abs(i2, w))];
}
w &= `t6 ${w} end`;
;
function g(res0, b5) {
b5++;
var w18 = 0;
while (w18 > 0) {
w18--;
res0--;
}
return w[(function (u) {
return u;
})(-(res0))];
}
print(g('hello', 'a,b,c'));
