outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
print(((p, q = '\n') => p + q)('abc'));
;
switch (Object.keys([1, 2]) < ('abc') && ((/ab+c/ ? 1 : 100))) {
case /x/i:
var w6 = 2;
while (w6 > 0) {
w6--;
print([...[[...[null, ~(/x/i)]], w6]]);
}
break;
case null:
case 100:
let flag1 = Object.keys({});
default:
--w6;
}
let x6 = Array.from({ length: 2 }, (e, i) => i * Infinity);
try {
function make8(c, flag3) {
((p, q = "x") => p + q)(String.raw`a${flag3}b`) % Object.keys([1, 2]);
print((new Date(10)) && (new Map()));
return String({ y0: new Object() });
}
print(make8('abc', 100));
;
} catch (e3) {
print(e3);
} finally {
x6 &= Object.keys({ a: 1 });
}
var w = 0;
do {
w += 1;
} while (w < 1);
for (var i = 0; i < 1; i++) {
for (let i4 = 0; i4 < 1; i4++) {
w <<= String.raw`a${null}b`;
print([`t7 ${w >= i4} end`, , -(undefined != x6)]);
}
i--;
}
