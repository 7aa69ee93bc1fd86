try {
switch (new Array(0)) {
case 1:
var str = { str, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
break;
case 'a,b,c':
case true:
((str[-1] ? str[str] : str)) ?? ({ x0: Math.min(true, 100) });
default:
([{ x0: 2, value1: 'abc' }, , new WeakMap()]) ?? (new Set());
}
} catch (err) {
print(err);
} finally {
{
for (const p4 of [1, 2, 3]) {
true;
}
try {
JSON.stringify((({ x: 1, length: 2 }).next) || ({ value0: null, p01: /[0-9]+/g, prop2: Infinity }));
} catch (err8) {
print(err8.message);
} finally {
const y = [...[[/x/i, , Object.keys({})], Object.keys({ a: 1 })]];
}
}
}
print('\n', 'str'[String(`t5 ${false} end`)]);
;
;
print(Math.min(((p, q = 'hello') => p + q)(false), 1));
switch (String(new Map())) {
case NaN:
const b = String.raw`a${100}b`;
break;
case 'a,b,c':
case -1:
print(undefined);
default:
Object.keys({ a: 1 });
}
;
(function (u) {
return u;
})((function (u) {
return u;
})(Array.from({ length: 1 }, (e, i) => i * Infinity)));
