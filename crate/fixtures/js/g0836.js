print(`t6 ${Object.keys({ a: 1 })} end`, ((p, q = 'a,b,c') => p + q)(Object.keys({})) << /x/i);
;
switch ([...['str'.p1, String(JSON.stringify('0'))]]) {
case 'abc':
for (let k = 0; k < 5; k++) {
eval("[1, 2].length");
eval("print('e')");
}
break;
case "x":
case undefined:
print(new Map(), (Object.keys({ a: 1 })) && ([String('a,b,c'), , [-1, , /[0-9]+/g]]));
default:
;
}
if ((true, 'hello')) {
var w3 = 0;
while (w3 > 0) {
w3--;
++w3;
}
;
} else {
[void (Array.from({ length: 1 }, (e, i) => i * 255)), , /[0-9]+/g];
}
{
print('str'.value, new Map());
}
function check(str4) {
str4 -= 'str'[String.raw`a${(255 ? str4 : /ab+c/)}b`];
print(arguments.length);
return 100;
}
print(check(undefined));
var w = 1;
while (w > 0) {
w--;
let res5 = /x/i;
}
