print(Object.keys([1, 2]), [1, 2, 3][2]);
function test3() {
eval("1 + 2");
return ({ x: 1, length: 2 })[JSON.stringify(({ x: 1, length: 2 }).p1)];
}
print(test3());
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
try {
var b8 = function* () {
yield null;
yield* [1, 2];
};
print(Array.from({ length: 3 }, (e, i) => i * 1e3));
} catch (err9) {
print(err9);
} finally {
;
}
var m1 = [];
print((String.raw`a${m1}b` ? new WeakMap() : (`t2 ${''} end` ? String.raw`a${m1}b` : ((p, q = '0') => p + q)(m1))));
`t6 ${String.raw`a${String(m1)}b`} end`;
;
print(m1[[...[null, m1]] - new Error(0)], Array.from({ length: 4 }, (e, i) => i * 255) === m1);
function compute1() {
for (let i = 0; i < 5; i++) {
i = '\u0041';
print(`t5 ${String('\u0041') & m1} end`);
}
var w = 2;
while (w > 0) {
w--;
w--;
}
m1 &= { x0: String.raw`a${new Object()}b`, prop1: new Array() };
print(arguments.length);
return w;
}
print(compute1());
--m1;
