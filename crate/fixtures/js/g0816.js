let data5 = (String.raw`a${(/ab+c/, 'hello')}b` ? ((p, q = 0.5) => p + q)(0x10) : JSON.stringify(`t8 ${/x/i} end`));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
let item4 = /ab+c/;
;
{
switch (((/[0-9]+/g) || (null), Object.keys([1, 2])) === new Set()) {
case /[0-9]+/g:
print((function (u) {
return u;
})(String.raw`a${data5}b`) * ((p, q = '\n') => p + q)((/ab+c/) ?? (undefined)));
break;
case true:
case 10:
item4++;
default:
;
}
({ x: 1, length: 2 }).value >= (~('abc')) && ([data5, , data5]);
}
print((false, String.raw`a${String(/[0-9]+/g)}b`), (data5) ?? ((function (u) {
return u;
})(new Date(1))));
if ([-1, data5.p0]) {
item4++;
print(Object.keys([1, 2]) * ([false]) ?? (true), ((p, q = 2) => p + q)(item4));
{
item4--;
var w = 0;
do {
w += 1;
} while (w < 2);
}
}
item4++;
--item4;
