const res3 = typeof (/[0-9]+/g);
switch (1e3) {
case NaN:
print(res3[res3], 'str'.y);
break;
case /x/i:
case /ab+c/:
print(/[0-9]+/g);
default:
const data1 = res3;
}
if (((NaN) ?? ({ x0: /ab+c/, length1: /ab+c/ })) || (String(res3))) {
var m7 = (u, v = 0x10) => u + v;
switch (0x10) {
case 100:
++m7;
break;
case NaN:
case 'abc':
m7 = String([...[m7.p1, [...[m7, m7]]]]);
default:
m7 = [Array.from({ length: 2 }, (e, i) => i * 255), , [Math.round(true, true), , new Array(1)]];
}
eval("print('e')");
} else {
eval("[1, 2].length");
for (const p9 of [1, 2, 3]) {
var w4 = 0;
while (w4 > 0) {
w4--;
w4['str'[~(res3)]];
}
}
}
var x = (function (u) {
return u;
})([String('0')]);
