print(String('str'[false % /ab+c/]));
for (let i = 0; i < 2; i++) {
i--;
print([({ length0: i, value1: undefined, x2: '' }) ?? (('0') ?? ('')), , ((p, q = /x/i) => p + q)(1)]);
}
print(2);
print('\n');
print(false);
for (var i7 = 0; i7 < 5; i7++) {
let z = null;
print({ value0: ((p, q = /ab+c/) => p + q)(Object.keys([1, 2])), p01: String('\u0041' % 1e3), p12: Object.keys({ a: 1 }) }, Math.abs(new Map(), [i7["x"], , JSON.stringify(z)]));
}
