var item6 = u => {
return u;
};
;
print([...[new Array(10), (String('a,b,c')) && (item6 < item6)]]);
print(Math.abs(Object.keys({}), ['str'[1]]), { value0: null });
var w = 0;
do {
w += 1;
} while (w < 4);
`t1 ${String(item6 | w)} end`;
var w14 = 0;
do {
w14 += 1;
} while (w14 < 4);
print((String.raw`a${10}b`, [...[((p, q = 'hello') => p + q)('abc'), Array.from({ length: 4 }, (e, i) => i * Infinity)]]), String.raw`a${new Date(10)}b`);
