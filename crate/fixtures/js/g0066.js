eval("var ev = 3; ev * 2");
print(!([1, 2, 3][('a,b,c', /x/i)]));
;
new WeakMap();
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
;
const b = { p10: String.raw`a${Object.keys([1, 2])}b`, next1: (/x/i ? `t1 ${3} end` : JSON.stringify(true)), y2: (function (u) {
return u;
})(/x/i) };
