print(new Object(), [Math.round('abc', (function (u) {
return u;
})(undefined)), , true]);
print([Object.keys({}), , new Error(10)], (({ length0: 0.5, prop1: 1, length2: 0x10 }, new Set()), ({ x: 1, length: 2 }).p1));
var w = 2;
while (w > 0) {
w--;
eval("print('e')");
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
--w;
;
w = w;
--w;
w++;
print((function (u) {
return u;
})(w.y), [w[w * w], ((undefined ? '\u0041' : true)) || ((w ? 0.5 : w))]);
w = (void (new Set()), 'str'[[...[w, w]]]);
