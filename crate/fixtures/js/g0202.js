eval("[1, 2].length");
function compute1(x, x3) {
var w8 = 0;
do {
w8 += 1;
} while (w8 < 3);
return w8;
}
print(compute1(0x10, 255));
{
print(Object.keys([1, 2]), ({ x: 1, length: 2 })[/[0-9]+/g]);
try {
{
;
eval("var ev = 3; ev * 2");
}
if (Array.from({ length: 1 }, (e, i) => i * NaN)) {
debugger;
var a = (function (u) {
return u;
})(((p, q = /[0-9]+/g) => p + q)(new Object(1)));
print(a.p0 | [Math.floor(a, a)], compute1(`t8 ${a} end`, `t0 ${JSON.stringify(null)} end`));
} else {
;
print(/ab+c/);
}
throw new TypeError('');
} catch (e) {
print(e.message);
} finally {
if (Object.keys({ a: 1 })) {
;
} else {
const z = `t6 ${'\u0041'} end` | [(/[0-9]+/g, 'abc'), , (/x/i, false)];
}
}
}
[...[10, [1, 2, 3].p1]] !== Array.from({ length: 4 }, (e, i) => i * 2);
{
;
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 4);
w3 = w3;
for (let k = 0; k < 4; k++) {
(function (u) {
return u;
})(new Set());
eval("print('e')");
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
{
w3 = [({ x: 1, length: 2 })[(false ? w3 : false)], , Object.keys([1, 2])];
}
if (((p, q = false) => p + q)(compute1(w3.x, w3))) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
}
