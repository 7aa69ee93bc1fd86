print(/[0-9]+/g);
if (/x/i) {
const tmp6 = Math.sqrt([true, ({ x: 1, length: 2 }).value], `t3 ${`t8 ${100} end`} end`);
} else {
for (var k of []) {
var str6 = !(k[[k, null, k]]);
}
for (var p of [1, 2, 3]) {
function f0(m2) {
m2.y;
let val = new WeakMap();
val = { p10: Object.keys({ a: 1 }), prop1: `t5 ${Math.abs(val, m2)} end` };
print(arguments.length);
return [...[(`t5 ${1e3} end` ? /x/i / '\n' : Array.from({ length: 4 }, (e, i) => i * 10)), String.raw`a${Object.keys([1, 2])}b`]];
}
print(f0(10));
}
}
;
try {
var arr3 = ([{ y0: -1, p01: 0.5, y2: 10 }, , [...[/[0-9]+/g, 1e3]]] ? true : Object.keys({ a: 1 }));
(function (u) {
return u;
})(1);
} catch (ex7) {
print(ex7.message);
}
for (let j3 = 0; j3 < 1; j3++) {
print(Array.from({ length: 1 }, (e, i) => i * 2) << j3);
var w = 1;
while (w > 0) {
w--;
if (w[new Set()]) {
w |= typeof (j3);
print([...[((p, q = 2) => p + q)([...['abc', 'a,b,c']]), String(String(w))]], (function (u) {
return u;
})(j3.x));
print(typeof (w.length), String(Math.floor(String.raw`a${j3}b`, /x/i * j3)));
} else {
print((w.x ? JSON.stringify(new Map()) : '\n'), '\n');
j3--;
}
}
}
print(null);
;
