outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
try {
;
for (var i = 0; i < 1; i++) {
++i;
i = [...[(i ? JSON.stringify(Infinity) : (i) && (i)), new Map()]];
}
throw new TypeError('\n');
} catch (e) {
print(e.message);
}
var w8 = 0;
while (w8 > 0) {
w8--;
if (((p, q = /x/i) => p + q)(Math.round(w8, null))) {
try {
w8 = String(Infinity);
} catch (err) {
print(err.message);
}
if (w8.prop) {
w8 = (([1, 2, 3][undefined]) ?? (Math.max(w8, w8)) ? [Math.sqrt('hello', w8), (w8 ? true : w8), /[0-9]+/g] : ((p, q = 'abc') => p + q)((w8) && (false)));
}
try {
String(Math.sqrt([], new Set()));
throw new TypeError("x");
} catch (ex) {
print(ex.message);
}
}
}
for (let p in { a: 1, b: 2 }) {
{
++p;
}
}
print(w8, /x/i);
switch (new Error(10)) {
case null:
w8 = { y0: [1, 2, 3][String(w8)], y1: +(JSON.stringify(/[0-9]+/g)) };
break;
case 1e3:
case true:
w8 = (w8 ? -((w8 ? w8 : '')) : [String(w8), , w8.p1]);
default:
debugger;
}
