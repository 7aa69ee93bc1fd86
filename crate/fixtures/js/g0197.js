print(('a,b,c', [('', /x/i), , Object.keys({})]), [(["x", 10]) && (~(false)), , String.raw`a${(/ab+c/, 255)}b`]);
for (let k6 in [1, 2]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
}
;
{
try {
(function (u) {
return u;
})(String.raw`a${{ p10: '\u0041', next1: /ab+c/, x2: '\n' }}b`);
print(((p, q = /ab+c/) => p + q)(((p, q = 'hello') => p + q)(Array.from({ length: 2 }, (e, i) => i * -1))), [Math.sqrt(/ab+c/, new Object(3)), (function (u) {
return u;
})(undefined), ((/x/i, /[0-9]+/g) ? 'str'.next : Array.from({ length: 3 }, (e, i) => i * Infinity))]);
} catch (ex3) {
print(ex3);
} finally {
;
}
switch ((function (u) {
return u;
})(new Object(1))) {
case NaN:
print(null);
break;
case null:
case null:
print(null);
default:
print(/x/i);
}
}
;
let data = Object.keys([1, 2]);
data = String.raw`a${{ length0: data }}b`;
