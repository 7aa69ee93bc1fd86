outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
print('hello');
print([...[String.raw`a${String('\n')}b`, ((function (u) {
return u;
})(/x/i)) || (100)]]);
print('0');
;
print(JSON.stringify(([1, 2, 3][1], Math.sqrt(true, 10))), [...[/[0-9]+/g, new Map()]]);
for (let i3 = 0; i3 < 5; i3++) {
const val8 = (function (u) {
return u;
})(new WeakMap());
i3--;
}
