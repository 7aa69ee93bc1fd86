var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
var w3 = 3;
while (w3 > 0) {
w3--;
{
try {
print(String(w3[false]));
eval("var ev = 3; ev * 2");
} catch (ex6) {
print(ex6.message);
}
}
}
var w = 0;
while (w > 0) {
w--;
w0 = new Date(0);
}
print([Array.from({ length: 2 }, (e, i) => i * 0.5), Math.max(/[0-9]+/g, !(w))], (String(new Set()), (w0, /[0-9]+/g)));
--w3;
switch ({ p10: [], length1: { p00: Math.floor(w, true) } }) {
case /x/i:
--w3;
break;
case null:
case undefined:
print(w.y, (function (u) {
return u;
})(({ x: 1, length: 2 })[Object.keys({})]));
default:
const str = new Object(0);
}
--w3;
var m = (u, v = 0x10) => u + v;
eval("[1, 2].length");
{
++w;
for (const p in [1, 2]) {
const b2 = !([String(false)]);
}
}
