if (({ x: 1, length: 2 }).next) {
function h9(x5) {
x5 = (x5) ?? ({ next0: 'str'[2], length1: x5 << x5, y2: (function (u) {
return u;
})(undefined) });
;
print(10, { prop0: x5 });
return (function (u) {
return u;
})(((function (u) {
return u;
})(x5), ''));
}
print(h9("x"));
} else {
switch (new Map()) {
case true:
Math.abs(([3, , /ab+c/] ? !(NaN) : ['0', , -1]), String(JSON.stringify(/x/i)));
break;
case /x/i:
case NaN:
print(Array.from({ length: 1 }, (e, i) => i * 2));
default:
'abc';
}
0x10;
}
for (var p of []) {
var w = 0;
do {
w += 1;
} while (w < 2);
}
;
var w9 = 2;
while (w9 > 0) {
w9--;
print(Object.keys({ a: 1 }), { p10: ([w9, undefined, NaN] ? (w9) && (NaN) : w9), p11: (Object.keys({})) && (['0', , w9]), y2: ({ x: 1, length: 2 })[String.raw`a${w9}b`] });
}
++w9;
;
print(-(!(w9)));
w9 = ((String.raw`a${w9}b`, ~(w9))) ?? ((JSON.stringify(w9), JSON.stringify(/ab+c/)));
{
w9 |= Object.keys({});
}
print((w9) ?? (`t0 ${((p, q = /[0-9]+/g) => p + q)(w9)} end`));
for (const k in [1, 2]) {
var x3 = !(String(((p, q = '\u0041') => p + q)(k)));
}
