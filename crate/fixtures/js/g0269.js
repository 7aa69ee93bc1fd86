eval("1 + 2");
print(null);
eval("var ev = 3; ev * 2");
for (var k7 of [1, 2, 3]) {
--k7;
}
debugger;
({ p10: JSON.stringify(true) });
var res = function* () {
yield '';
yield* [1, 2];
};
for (let p of [1, 2, 3]) {
(p[res]) ?? ((void (false), (null ? 0x10 : p)));
}
