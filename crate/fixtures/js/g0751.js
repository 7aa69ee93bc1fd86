for (const p9 of 'ab') {
try {
print(~(('' ? 1e3 : null) - !('\u0041')));
try {
print((`t7 ${Array.from({ length: 1 }, (e, i) => i * 0)} end`, [false, Object.keys({}), (p9) ?? (p9)]), 10);
} catch (err5) {
print(err5);
}
} catch (ex) {
print(ex.message);
}
}
switch (1) {
case Infinity:
for (let p of [1, 2, 3]) {
print([...[((p, q = /[0-9]+/g) => p + q)([]), ((p, q = 100) => p + q)(Object.keys({}))]]);
}
break;
case 'abc':
case null:
;
default:
print(String([...[~(10), false]]), undefined);
}
print({ next0: [({ x: 1, length: 2 })[/[0-9]+/g], , [...[undefined, null]]] }, /ab+c/);
eval("[1, 2].length");
for (let i = 0; i < 3; i++) {
var w = 2;
while (w > 0) {
w--;
i--;
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
}
