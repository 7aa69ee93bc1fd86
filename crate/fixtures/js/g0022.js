var count = (u, v = '') => u + v;
{
function check(acc) {
acc++;
return new Set();
}
check(1e3);
print(check((((p, q = /[0-9]+/g) => p + q)(count) ? count >= count : ['abc', , ''])));
}
switch (JSON.stringify((String.raw`a${/x/i}b`) || ([1, 2, 3][count]))) {
case 255:
count--;
break;
case 1:
case -1:
eval("[1, 2].length");
default:
count &= "x";
}
print([...[((p, q = /[0-9]+/g) => p + q)(JSON.stringify(255)), new Array()]], (Math.floor(count.p1, (100, count)), Array.from({ length: 1 }, (e, i) => i * 255)));
var w9 = 2;
while (w9 > 0) {
w9--;
switch (w9[new Set()]) {
case /ab+c/:
count &= /ab+c/;
break;
case false:
case undefined:
count = 1;
default:
eval("print('e')");
}
}
switch (String.raw`a${count}b`) {
case undefined:
eval("1 + 2");
break;
case undefined:
case 'a,b,c':
eval("[1, 2].length");
default:
Object.keys({});
}
const str = /x/i;
eval("[1, 2].length");
