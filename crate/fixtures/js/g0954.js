;
try {
for (let i1 = 0; i1 < 5; i1++) {
switch (i1[new WeakMap()]) {
case /[0-9]+/g:
i1 *= (`t4 ${String.raw`a${null}b`} end`, (new Error(1)) ?? (`t0 ${i1} end`));
break;
case 2:
case '':
;
default:
++i1;
}
i1 = (false ? [{ next0: i1, prop1: i1 }, 'str'[i1]] : ((p, q = 'a,b,c') => p + q)([i1, 255, 1]));
}
throw new RangeError('0');
} catch (err) {
print(err.message);
} finally {
var count4 = (u, v = null) => u + v;
}
false;
try {
if (undefined) {
;
print(true, ((function (u) {
return u;
})([])) ?? (void ((undefined ? '0' : 2))));
} else {
;
print(255, false);
}
throw new TypeError('a,b,c');
} catch (e) {
print(e.message);
}
print(!(String.raw`a${`t2 ${0} end`}b`), { y0: 'str'[100], p11: String(String('hello')), prop2: void ((10) && (undefined)) });
print(Array.from({ length: 0 }, (e, i) => i * NaN));
{
print([1, 2, 3].prop);
{
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
}
}
