var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
;
eval("[1, 2].length");
++w0;
switch (String(w0)) {
case '0':
function wrap0(val3, str1) {
str1 = (true) || ([...[val3 * '\u0041', 'a,b,c']]);
return Infinity;
}
print(wrap0(/[0-9]+/g, undefined));
break;
case /[0-9]+/g:
case NaN:
w0++;
default:
eval("var ev = 3; ev * 2");
}
var w5 = 2;
while (w5 > 0) {
w5--;
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
}
for (let p0 in [1, 2]) {
print(`t6 ${String([w0, /x/i])} end`, [...[String(new Set()), { next0: /ab+c/, length1: 'a,b,c' * /x/i, length2: JSON.stringify(3) }]]);
}
w0++;
