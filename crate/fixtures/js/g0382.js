print(false);
print({ length0: new Object(), p11: [Object.keys({}), (3, 3), Math.round(10, '')] });
([...[[2, , '\u0041'], `t8 ${null} end`]] ? JSON.stringify((1 ? 3 : 'hello')) : String('\n'));
print(new Set(), 'str'[Math.pow(((p, q = /[0-9]+/g) => p + q)('abc'), [1, 2, 3].next)]);
