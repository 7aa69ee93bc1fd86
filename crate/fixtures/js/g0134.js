JSON.stringify(JSON.stringify("x" & /x/i));
function make9(flag, z) {
z = String(new Map());
var obj4 = [1, 2, 3].p1;
((p, q = false) => p + q)(Math.pow(z, 0x10)) & ({ x: 1, length: 2 }).p1;
return (`t5 ${(function (u) {
return u;
})(flag)} end`) || (((p, q = true) => p + q)(+('0')));
}
make9(/[0-9]+/g, false);
print(JSON.stringify(((p, q = NaN) => p + q)(new Set())), { length0: { p10: 'hello', y1: "x", value2: NaN } >>> String.raw`a${Infinity}b` });
print(String.raw`a${new Date(10)}b`, (Array.from({ length: 1 }, (e, i) => i * 10), [String(true), , [1, /[0-9]+/g]]));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
{
var { y: key1 = '\u0041', ...rest8 } = { x: 1 };
}
print('str'.y);
;
print(true);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
0;
