String.raw`a${+((0.5, /[0-9]+/g))}b`;
;
var w = 0;
do {
w += 1;
} while (w < 3);
if (w) {
([...[false, (/ab+c/) ?? (NaN)]] ? String.raw`a${[false, , /ab+c/]}b` : [String.raw`a${w}b`, { prop0: 10 }, /ab+c/]);
print([w.prop, , String.raw`a${w}b`], ((new Array(1), w) ? Math.floor(w.y, { prop0: 2, value1: undefined }) : ((p, q = /[0-9]+/g) => p + q)(String(10))));
}
print(w, [[/[0-9]+/g, w], ((p, q = /[0-9]+/g) => p + q)(w), [1, 2, 3][w]] < (function (u) {
return u;
})(w));
switch (/ab+c/) {
case 'abc':
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break;
}
}
break;
case false:
case /[0-9]+/g:
eval("1 + 2");
default:
const c3 = w.value;
}
switch (w) {
case undefined:
try {
let val = (((function (u) {
return u;
})('abc')) ?? ([...[undefined, w]]), (Object.keys([1, 2]) ? ({ x: 1, length: 2 })['hello'] : Math.abs(w, w)));
throw new RangeError('abc');
} catch (e9) {
print(e9.message);
}
break;
case 'a,b,c':
case undefined:
print([JSON.stringify((1 ? w : w))], []);
default:
w = typeof (new WeakMap());
}
w += +((Array.from({ length: 1 }, (e, i) => i * 0.5), new WeakMap()));
