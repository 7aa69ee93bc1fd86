for (var p of []) {
print(p[[...[new WeakMap(), new Date()]]], (function (u) {
return u;
})(Math.round(~(p), String.raw`a${255}b`)));
}
eval("[1, 2].length");
eval("print('e')");
;
;
print((function (u) {
return u;
})(new Date()));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
print(/[0-9]+/g);
print(JSON.stringify(Math.floor(undefined, [/[0-9]+/g, , true])), { next0: Object.keys([1, 2]), p11: true, prop2: 'str'[new Array()] });
0;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
