(function (u) {
return u;
})(((undefined ? /ab+c/ : "x") ? +(0.5) : JSON.stringify(-1)));
for (var k9 = 0; k9 < 3; k9++) {
var w = 1;
while (w > 0) {
w--;
for (const p of [1, 2, 3]) {
k9--;
}
}
var w39 = 1;
while (w39 > 0) {
w39--;
if (({ x: 1, length: 2 }).p1) {
;
String(String([undefined, , w]));
++w;
} else {
w = Math.round(JSON.stringify([]), 0x10);
}
}
}
[1, 2, 3].p1;
print((-1) || (true), [...[(function (u) {
return u;
})(String.raw`a${/x/i}b`), (({ x: 1, length: 2 }).value ? Object.keys({ a: 1 }) : 3)]]);
switch (new Map()) {
case '':
print(JSON.stringify([]), ((p, q = NaN) => p + q)(null));
break;
case undefined:
case 'a,b,c':
let val = false;
default:
var acc9 = (val) || ([...[((p, q = 3) => p + q)(-1), []]]);
}
print('\u0041');
try {
var w3 = 3;
while (w3 > 0) {
w3--;
Math.min(String(+(w3)), w3);
}
print(w3[null], /ab+c/);
} catch (ex0) {
print(ex0);
}
(Math.min([...[/[0-9]+/g, /ab+c/]], 'str'[true]), `t6 ${JSON.stringify(0)} end`);
let arr5 = null;
print([...[(({ x: 1, length: 2 }).prop) ?? (new Map()), { next0: arr5 <= undefined, p01: /x/i === arr5, next2: arr5[/ab+c/] }]]);
new Set();
