outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
;
eval("var ev = 3; ev * 2");
[...[[String.raw`a${/[0-9]+/g}b`, , `t1 ${/x/i} end`], 1]];
