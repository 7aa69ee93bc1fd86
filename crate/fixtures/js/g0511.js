(Array.from({ length: 4 }, (e, i) => i * Infinity)) && (((p, q = /ab+c/) => p + q)({ value0: undefined, p11: Infinity }));
String([(/[0-9]+/g ? NaN : '\n')]);
eval("print('e')");
print({ next0: String.raw`a${null}b`, x1: new Map(), next2: (function (u) {
return u;
})(String('a,b,c')) }, (String(`t0 ${255} end`)) ?? ((String.raw`a${true}b`) ?? (['\n', /x/i])));
;
