var val = new WeakMap() - (2 > Infinity ? 100 : !('abc'));
print(Array.from({ length: 0 }, (e, i) => i * 1e3), `t1 ${`t3 ${(val ? /ab+c/ : 0.5)} end`} end`);
{
val++;
}
val = ((p, q = 2) => p + q)((function (u) {
return u;
})((/ab+c/ ? /ab+c/ : 0.5)));
{
var w9 = 0;
do {
w9 += 1;
} while (w9 < 3);
}
++val;
;
--val;
try {
val += { next0: null };
print(+(new Map()), new Set());
throw new RangeError("x");
} catch (err) {
print(err);
}
switch (String(String.raw`a${[val, undefined, val]}b`)) {
case 1:
--val;
break;
case 1:
case 10:
val = val.p0;
default:
print([([undefined, val]) ?? (-(val)), , Math.floor([undefined], val)], val.value);
}
