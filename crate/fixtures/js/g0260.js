function compute(x) {
x++;
switch (((String('hello')) || (((p, q = /ab+c/) => p + q)(x)), (new WeakMap()) ?? (true))) {
case true:
++x;
break;
case '\n':
case 0.5:
x--;
default:
x &= new Map();
}
return new WeakMap();
}
print(compute(10));
var w6 = 1;
while (w6 > 0) {
w6--;
function h6(c) {
w6 += `t4 ${false * 1 * (c, null)} end`;
;
return [((p, q = false) => p + q)(String.raw`a${w6}b`), , `t3 ${(w6) && (-1)} end`];
}
print(h6(3));
}
for (let k = 0; k < 2; k++) {
eval("var ev = 3; ev * 2");
print(Object.keys({ a: 1 }), new Map());
}
w6--;
var val = [void (new Set()), , w6[new Set()]];
w6 = (val.length ? new Error() : `t8 ${(w6, val)} end`);
for (var k8 = 0; k8 < 2; k8++) {
var w = 0;
while (w > 0) {
w--;
print([1, 2, 3].next, w6);
}
switch ((function (u) {
return u;
})(k8)) {
case /ab+c/:
if (w) {
print(+([new WeakMap(), , w.next]), w6);
k8 <<= new Array(10);
}
break;
case "x":
case /[0-9]+/g:
val |= new Map();
default:
w6 += Object.keys([1, 2]);
}
}
eval("var ev = 3; ev * 2");
