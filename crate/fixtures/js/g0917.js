;
print('abc');
var w3 = 0;
do {
w3 += 1;
} while (w3 < 2);
print(new Map(), w3.p1);
function helper(key) {
var [n6, , ...tail4] = [false, 2, 3];
var flag = String.raw`a${(new Map(), 'a,b,c')}b`;
switch (String(null)) {
case 'abc':
print([JSON.stringify([n6, , w3]), , { y0: ((p, q = /x/i) => p + q)(flag), length1: `t6 ${3} end` }], typeof ([[], , '\u0041']));
break;
case 255:
case undefined:
eval("1 + 2");
default:
let y5 = ((p, q = '0') => p + q)(n6);
}
return n6;
}
print(helper(false));
(new Object() ? (Math.floor(NaN, true), 'hello' << 255) : String(helper()));
--w3;
