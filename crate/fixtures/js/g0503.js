[...[Array.from({ length: 3 }, (e, i) => i * 3), ((/x/i, /[0-9]+/g)) && (NaN)]];
eval("[1, 2].length");
print([1, 2, 3].length, new Error());
switch (+(undefined)) {
case null:
print(((p, q = 10) => p + q)(Array.from({ length: 3 }, (e, i) => i * 255)));
break;
case true:
case undefined:
print((function (u) {
return u;
})([Array.from({ length: 3 }, (e, i) => i * 100), , ((p, q = '0') => p + q)(Infinity)]));
default:
;
}
;
const flag5 = (Object.keys({ a: 1 })) ?? (((p, q = undefined) => p + q)(Array.from({ length: 2 }, (e, i) => i * Infinity)));
eval("1 + 2");
([...[Math.abs(/[0-9]+/g, 0x10), (flag5 ? 0.5 : '')]]) ?? (['abc', flag5, Array.from({ length: 0 }, (e, i) => i * NaN)]);
