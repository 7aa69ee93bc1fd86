var { p1: str = Infinity, ...tail4 } = { x: 1 };
var w = 0;
do {
w += 1;
} while (w < 3);
{
switch (/x/i) {
case true:
var w3 = 0;
while (w3 > 0) {
w3--;
w3--;
}
break;
case /ab+c/:
case /ab+c/:
++w3;
default:
print({ p00: [{ next0: w3 }, , w3] }, { next0: str, length1: /ab+c/ });
}
new Map();
}
++w;
var flag = { next0: `t4 ${(0x10 ? w : str)} end`, value1: new WeakMap() };
eval("print('e')");
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
{
str &= new Set();
}
