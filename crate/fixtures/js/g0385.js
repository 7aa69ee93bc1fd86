if (/x/i) {
;
}
try {
print({ prop0: `t1 ${undefined} end`, length1: ['a,b,c', false, /[0-9]+/g] } ^ [1, 2, 3][(function (u) {
return u;
})(/[0-9]+/g)]);
Math.sqrt('str'[!(false)], JSON.stringify({ p10: 1e3 }));
} catch (ex) {
print(ex);
}
;
print(null);
print(('hello' ? { prop0: Array.from({ length: 2 }, (e, i) => i * 100), value1: ((p, q = 0.5) => p + q)('hello'), length2: (/ab+c/) || (false) } : ((p, q = 10) => p + q)(new Array())));
print(true);
