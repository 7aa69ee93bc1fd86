print(/x/i, String(new Date(1) - /x/i));
eval("print('e')");
;
print('');
print({ value0: String.raw`a${(/ab+c/, 0.5)}b`, prop1: (10) || (JSON.stringify(/x/i)), prop2: Array.from({ length: 0 }, (e, i) => i * NaN) });
{
switch ([...[[!(/ab+c/)], ((p, q = 'hello') => p + q)(null <= undefined)]]) {
case true:
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) break outer;
}
}
break;
case true:
case 1:
print(true);
default:
print(false);
}
}
try {
const obj = "x";
} catch (e) {
print(e.message);
}
const data3 = (/[0-9]+/g) && ([1, 2, 3][true % "x"]);
print((function (u) {
return u;
})(new Map()));
try {
function f(arr) {
++arr;
print('str'[((p, q = '\u0041') => p + q)(1e3)] | arr.prop, [...[Math.floor('\n', `t0 ${arr} end`), (-1 & data3) ?? ([...[100, data3]])]]);
print(`t3 ${[]} end`);
return String.raw`a${'0'}b`;
}
print(f(0));
} catch (e1) {
print(e1);
}
