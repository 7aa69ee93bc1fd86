outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
print(new Set());
let item = Object.keys({ a: 1 });
var x7 = { item, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
var n = (~([item, , x7]) ? [x7.p1, Math.min(undefined, /[0-9]+/g)] : new Map());
;
try {
{
if (`t2 ${(n ? item : ((p, q = '0') => p + q)(x7))} end`) {
print([Math.floor(['0'], Math.pow(n, 0)), , ((/[0-9]+/g) && (x7)) && (item)]);
n -= Array.from({ length: 0 }, (e, i) => i * 3);
print(String.raw`a${Array.from({ length: 4 }, (e, i) => i * 3)}b`);
} else {
n = (`t8 ${`t3 ${n} end`} end` ? x7 : [1, 2, 3][String(10)]);
}
switch ({ prop0: [...[((p, q = '\n') => p + q)(0x10), ((p, q = 100) => p + q)(n)]], y1: Object.keys({ a: 1 }) }) {
case true:
print(String.raw`a${{ prop0: ((p, q = -1) => p + q)(x7), next1: (function (u) {
return u;
})(item) }}b`);
break;
case undefined:
case /[0-9]+/g:
item = Math.max(x7['abc'], String(`t0 ${item} end`));
default:
print(("x" ? [(n ? '0' : undefined)] : [String(x7), , (item, undefined)]), [(void (item), new WeakMap()), item.prop, "x"]);
}
}
} catch (ex) {
print(ex.message);
}
n--;
++n;
let res = [Object.keys({ a: 1 }), , /ab+c/];
n = [Object.keys({}), , ((NaN ? n : x7)) || (/ab+c/)];
