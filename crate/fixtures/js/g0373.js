{
let str = 'str'.prop;
try {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue outer;
}
}
} catch (ex) {
print(ex.message);
}
}
{
function g(acc4, x) {
--x;
print(acc4, x[JSON.stringify(Array.from({ length: 3 }, (e, i) => i * 1e3))]);
acc4 = ([acc4[2], , []] ? [JSON.stringify(10), { y0: acc4, y1: /[0-9]+/g, value2: /ab+c/ }] : Object.keys([1, 2]));
return (((p, q = NaN) => p + q)(((p, q = 1) => p + q)(acc4)), ('str'.value, JSON.stringify(x)));
}
print(g(/ab+c/, '0'));
}
;
function compute8(arr) {
try {
var key = Object.keys([1, 2]);
print(key, void (key));
throw new TypeError('0');
} catch (ex1) {
print(ex1.message);
}
arr = String.raw`a${{ next0: arr[null] }}b`;
return String.raw`a${([...[arr, '\u0041']]) || ((function (u) {
return u;
})(arr))}b`;
}
print(compute8(2));
switch (new WeakMap()) {
case undefined:
if ('str'["x"]) {
print(false);
if ([]) {
;
print(undefined);
}
;
}
break;
case '\u0041':
case Infinity:
String.raw`a${([undefined, , /[0-9]+/g]) ?? (['hello', , 0])}b`;
default:
compute8(new Set(), ((p, q = /[0-9]+/g) => p + q)({ prop0: false, x1: Infinity }));
}
;
