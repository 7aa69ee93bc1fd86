outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
print('\n');
for (let i6 = 0; i6 < 5; i6++) {
print(new WeakMap());
[...[[new Date(3), i6], String.raw`a${JSON.stringify('hello')}b`]];
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
for (let j4 = 0; j4 < 2; j4++) {
let val = Array.from({ length: 4 }, (e, i) => i * NaN);
--j4;
}
for (let j7 = 0; j7 < 1; j7++) {
for (var k5 = 0; k5 < 5; k5++) {
for (var k7 = 0; k7 < 3; k7++) {
eval("print('e')");
k7--;
}
;
}
for (let j = 0; j < 1; j++) {
if ({ x0: [String.raw`a${false}b`, , new Error(10)], y1: [...[(j ? j : j7), 0x10]] }) {
;
j = typeof (new Set());
`t8 ${((p, q = /x/i) => p + q)(j)} end`;
} else {
print(String.raw`a${Array.from({ length: 3 }, (e, i) => i * 0)}b`, { y0: `t5 ${'0'} end`, prop1: new Array(1), next2: `t5 ${(j7, 0.5)} end` });
j7++;
}
j7 -= /x/i;
}
}
var key = [1, 2, 3].length;
for (let k3 = 0; k3 < 4; k3++) {
print(new WeakMap());
{
var w = 3;
while (w > 0) {
w--;
++key;
}
}
}
for (var i4 = 0; i4 < 2; i4++) {
{
if (Object.keys([1, 2])) {
key *= (String.raw`a${Array.from({ length: 2 }, (e, i) => i * 0)}b`) ?? ((function (u) {
return u;
})(key));
print(i4.next, Array.from({ length: 2 }, (e, i) => i * 0.5));
var a1 = JSON.stringify(`t6 ${[key, , false]} end`);
} else {
((p, q = undefined) => p + q)(i4);
print((function (u) {
return u;
})(Math.abs(Array.from({ length: 1 }, (e, i) => i * 1e3), Array.from({ length: 2 }, (e, i) => i * Infinity))));
}
}
i4 *= ((p, q = '') => p + q)(Object.keys([1, 2]));
}
