{
if (JSON.stringify({ next0: new Set() })) {
switch ([...[new WeakMap(), [({ x: 1, length: 2 }).y, , new Map()]]]) {
case undefined:
(0x10 ? (function (u) {
return u;
})([null, , 0x10]) : Array.from({ length: 0 }, (e, i) => i * 1));
break;
case /x/i:
case true:
;
default:
print("x");
}
var { x: b1 = 0, ...rest3 } = { x: 1 };
function helper7(m) {
Object.keys([1, 2]);
b1 |= `t2 ${`t2 ${String.raw`a${m}b`} end`} end`;
return [...[(function (u) {
return u;
})(/[0-9]+/g) <= Math.round('\n', b1), ((p, q = 10) => p + q)(m)]];
}
print(helper7(''));
} else {
eval("var ev = 3; ev * 2");
print([Math.min(((p, q = true) => p + q)(''), /x/i === "x"), /ab+c/]);
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
}
eval("1 + 2");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
eval("1 + 2");
try {
print('hello');
} catch (err) {
print(err);
}
var [item, , ...rest] = ['\n', 2, 3];
var w7 = 0;
while (w7 > 0) {
w7--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
}
