for (let p2 in { a: 1, b: 2 }) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
}
var n6 = new WeakMap();
;
var acc = u => {
return u;
};
for (var k8 in [1, 2]) {
for (let k = 0; k < 2; k++) {
try {
;
} catch (ex) {
print(ex);
} finally {
print(n6[k.next], Object.keys({ a: 1 }) * k);
}
--k;
}
}
switch (String.raw`a${String(n6)}b`) {
case null:
for (var p11 of 'ab') {
eval("var ev = 3; ev * 2");
}
break;
case 'a,b,c':
case 0:
n6 <<= Math.pow(Array.from({ length: 2 }, (e, i) => i * 255), ({ x: 1, length: 2 })[+(false)]);
default:
String.raw`a${n6.prop}b`;
}
