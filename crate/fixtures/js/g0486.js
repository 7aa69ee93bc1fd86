;
{
const flag = [[...[((p, q = 'abc') => p + q)('a,b,c'), (/ab+c/) ?? (false)]], 0.5];
}
print(undefined);
eval("1 + 2");
{
var w5 = 0;
do {
w5 += 1;
} while (w5 < 3);
for (let j = 0; j < 2; j++) {
JSON.stringify((('hello') || (j)) && ({ length0: 2, y1: 255 }));
j = Math.pow(Math.min(typeof ('0'), ('hello', null)), (((p, q = 1e3) => p + q)('0') ? String(100) : `t8 ${w5} end`));
}
}
switch (!(/[0-9]+/g & 10) & JSON.stringify(new Error())) {
case 0x10:
;
break;
case /ab+c/:
case null:
;
default:
;
}
function make() {
for (let k4 of []) {
var flag4 = k4;
}
return (Math.max((255) || (/x/i), Array.from({ length: 2 }, (e, i) => i * Infinity))) || (-1);
}
print(make());
