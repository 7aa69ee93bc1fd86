{
print(/x/i);
const res4 = String(((p, q = '\n') => p + q)([...[undefined, 100]]));
}
print(+([1, 2, 3][Array.from({ length: 3 }, (e, i) => i * NaN)]));
var w9 = 0;
do {
w9 += 1;
} while (w9 < 2);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
switch (new Array(3)) {
case 0.5:
for (var k = 0; k < 2; k++) {
print((function (u) {
return u;
})(w9), (function (u) {
return u;
})((`t6 ${k} end` ? ({ x: 1, length: 2 }).p0 : w9)));
{
;
}
}
break;
case "x":
case /x/i:
undefined;
default:
[];
}
w9 = [[1e3], , { next0: (0.5 ? 'a,b,c' : null) }];
eval("[1, 2].length");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
switch ((JSON.stringify(w9[false]), ({ x: 1, length: 2 }).length)) {
case /ab+c/:
eval("print('e')");
break;
case 'hello':
case "x":
;
default:
print(+(`t5 ${String(w9)} end`), `t3 ${((p, q = 3) => p + q)([])} end`);
}
eval("var ev = 3; ev * 2");
