;
print([1, 2, 3].p1, void ({ next0: /x/i }));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
eval("1 + 2");
function f() {
print(Math.abs(10, { prop0: "x", length1: '0' } / `t4 ${/ab+c/} end`));
for (let j2 = 0; j2 < 2; j2++) {
print(`t5 ${Object.keys({ a: 1 })} end`);
++j2;
}
print(arguments.length);
return Array.from({ length: 4 }, (e, i) => i * Infinity);
}
print(f());
print([1, 2, 3].value, `t3 ${Math.pow((function (u) {
return u;
})(2), new Object(3))} end`);
;
;
const x7 = (function (u) {
return u;
})((undefined, (function (u) {
return u;
})(false)));
for (const p8 in { a: 1, b: 2 }) {
var str = JSON.stringify(String.raw`a${p8}b`);
}
const tmp = Math.min([((p, q = 1) => p + q)(0), -(x7), [...[null, x7]]], `t8 ${[...[x7, x7]]} end`);
