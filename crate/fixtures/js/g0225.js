let data7 = Infinity;
var w = 2;
while (w > 0) {
w--;
const tmp = -(Math.floor(-('\u0041'), true));
}
var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
switch (Object.keys([1, 2])) {
case null:
data7 <<= Object.keys({}) ^ 'abc';
break;
case /[0-9]+/g:
case undefined:
print(data7, String.raw`a${data7}b`);
default:
w = true;
}
--data7;
var flag1 = `t2 ${(function (u) {
return u;
})('')} end` * `t4 ${w[/x/i]} end`;
for (var k of 'ab') {
let y7 = '\u0041';
}
--data7;
++flag1;
--flag1;
try {
var z7 = [new Array(10), void (new Date()), /x/i];
} catch (e) {
print(e.message);
} finally {
eval("[1, 2].length");
}
