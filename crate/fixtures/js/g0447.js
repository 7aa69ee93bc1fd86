outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
{
print([[], , undefined], Math.abs(/[0-9]+/g, (new Date(3), (Infinity, false))));
var w = 1;
while (w > 0) {
w--;
--w;
}
}
print(JSON.stringify('a,b,c'));
if (((p, q = undefined) => p + q)(Object.keys({ a: 1 }))) {
print(NaN);
} else {
;
{
print(true);
}
}
print(0, { p00: /ab+c/, next1: { next0: { x0: /ab+c/, length1: true, length2: true }, p01: Object.keys([1, 2]), p02: { next0: 'a,b,c' } }, x2: (`t7 ${null} end`, ((p, q = 'abc') => p + q)(-1)) });
var w19 = 0;
do {
w19 += 1;
} while (w19 < 1);
switch ((function (u) {
return u;
})(new Object(1))) {
case false:
eval("1 + 2");
break;
case '':
case '0':
;
default:
++w19;
}
print(String.raw`a${(Object.keys({ a: 1 }) ? false : `t0 ${/x/i} end`)}b`);
