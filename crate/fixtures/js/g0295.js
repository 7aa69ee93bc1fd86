if (Math.pow('abc', 2)) {
var w = 3;
while (w > 0) {
w--;
w++;
}
print([w, , Array.from({ length: 2 }, (e, i) => i * 3)], ([...[undefined, w]] & (null) && (/ab+c/), (JSON.stringify(/x/i) ? ((p, q = true) => p + q)(/ab+c/) : w)));
} else {
eval("[1, 2].length");
}
{
;
;
}
switch (/[0-9]+/g) {
case /[0-9]+/g:
(JSON.stringify(1e3)) ?? (JSON.stringify(String.raw`a${null}b`));
break;
case '':
case 10:
print(String.raw`a${String.raw`a${`t8 ${0} end`}b`}b`);
default:
print(/ab+c/);
}
if ('') {
print(((p, q = 255) => p + q)({ prop0: (255) && (/ab+c/) }), ((new Map(), { p10: false, next1: 0.5 }), new Map()));
[Object.keys({ a: 1 })];
}
switch (({ next0: undefined } ? JSON.stringify((function (u) {
return u;
})(undefined)) : `t1 ${String.raw`a${'abc'}b`} end`)) {
case 10:
;
break;
case '\n':
case '\n':
String.raw`a${/[0-9]+/g}b`;
default:
Math.round([...[/ab+c/, ['\u0041', , '']]], [new Map(), , 0 >= false]);
}
let key = [1, 2, 3].p1;
{
{
if (([...[key.length, Array.from({ length: 3 }, (e, i) => i * 3)]] ? (function (u) {
return u;
})(undefined >>> null) : '\u0041')) {
--key;
;
'\n';
}
key = JSON.stringify(key);
}
for (let i = 0; i < 1; i++) {
if (/ab+c/) {
Array.from({ length: 2 }, (e, i) => i * 2);
}
for (const p4 of []) {
const arr = Array.from({ length: 0 }, (e, i) => i * 1e3);
}
}
}
key = key.p1;
function compute(b5) {
print((-1, [...[JSON.stringify(b5), ((p, q = '\n') => p + q)(b5)]]));
b5 += (Array.from({ length: 0 }, (e, i) => i * -1), +((b5, 0)));
return (function (u) {
return u;
})(Object.keys({ a: 1 }));
}
print(compute('abc'));
