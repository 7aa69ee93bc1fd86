print([]);
var w0 = 1;
while (w0 > 0) {
w0--;
print(`t4 ${((p, q = 1) => p + q)([w0, 0x10])} end`);
}
print([Object.keys({ a: 1 })], [[w0[/[0-9]+/g], , (w0 ? w0 : w0)], , w0]);
for (let k of [1, 2, 3]) {
var w = 0;
do {
w += 1;
} while (w < 3);
}
switch ([...[{ p10: '0' }, [...[{ p00: '', y1: /[0-9]+/g, p12: 2 }, (function (u) {
return u;
})(w0)]]]]) {
case /[0-9]+/g:
{
try {
print(Array.from({ length: 3 }, (e, i) => i * 2));
} catch (ex6) {
print(ex6);
} finally {
print(new Error() + { y0: (/[0-9]+/g, 'abc') });
}
var w34 = 1;
while (w34 > 0) {
w34--;
++w0;
}
}
break;
case 10:
case null:
Array.from({ length: 4 }, (e, i) => i * 1e3);
default:
;
}
((p, q = -1) => p + q)((new Array(0) ? w0 : [w0, , w0]));
(new Error(10)) || (({ x: 1, length: 2 })[undefined]);
w0++;
