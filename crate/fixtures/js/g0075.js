eval("1 + 2");
print('0');
/ab+c/;
switch (`t4 ${`t1 ${(/x/i) ?? (0)} end`} end`) {
case null:
for (var k = 0; k < 5; k++) {
const tmp = -(k);
{
k = [1, 2, 3][[String(NaN), , tmp]];
k &= (JSON.stringify('abc') ? `t8 ${undefined < ''} end` : Math.max(0x10, String.raw`a${/[0-9]+/g}b`));
}
}
break;
case false:
case /ab+c/:
;
default:
print("x");
}
eval("1 + 2");
eval("1 + 2");
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
w1 &= `t7 ${(w1, [w1, , w1])} end`;
try {
try {
print([...[{ value0: `t5 ${NaN} end`, p01: (function (u) {
return u;
})(false) }, w1]]);
{
eval("var ev = 3; ev * 2");
}
} catch (err4) {
print(err4);
}
{
for (var k6 = 0; k6 < 1; k6++) {
print(new Array(10));
eval("print('e')");
}
debugger;
}
} catch (err) {
print(err);
}
try {
w1 = [w1.p1];
} catch (e0) {
print(e0);
}
++w1;
