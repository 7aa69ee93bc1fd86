print([...[void ({ value0: '', next1: /x/i, p02: '0' }), ((p, q = '') => p + q)(("x" ? '\n' : 'hello'))]], [String.raw`a${JSON.stringify(true)}b`, , []]);
switch (String(`t8 ${(undefined, 100)} end`)) {
case false:
if ([typeof ((/x/i) ?? ("x")), , ({ x: 1, length: 2 }).prop]) {
var w = 0;
while (w > 0) {
w--;
const n = `t2 ${[w[w], , [1, 2, 3][/x/i]]} end`;
}
print(w);
}
break;
case /ab+c/:
case true:
;
default:
print(/x/i);
}
print(null);
print(/x/i);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
for (let j4 = 0; j4 < 5; j4++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
print(new WeakMap(), j4);
}
;
var w6 = 0;
do {
w6 += 1;
} while (w6 < 1);
w6++;
++w6;
w6 += [(((p, q = /ab+c/) => p + q)(/[0-9]+/g)) || (Array.from({ length: 0 }, (e, i) => i * 3))];
