try {
;
try {
for (var k8 = 0; k8 < 3; k8++) {
k8--;
String(String([]));
}
JSON.stringify(({ x: 1, length: 2 })[[/[0-9]+/g, /ab+c/]]);
} catch (e) {
print(e.message);
}
} catch (ex) {
print(ex.message);
}
if ((String.raw`a${String(true)}b` ? String(new Object(1)) : String.raw`a${Array.from({ length: 0 }, (e, i) => i * 1)}b`)) {
for (let j8 = 0; j8 < 1; j8++) {
print(j8[new WeakMap()]);
eval("[1, 2].length");
}
}
const count = JSON.stringify('0');
eval("[1, 2].length");
var w = 3;
while (w > 0) {
w--;
w *= Array.from({ length: 1 }, (e, i) => i * 1);
}
w *= (function (u) {
return u;
})(String(count[2]));
print('abc');
