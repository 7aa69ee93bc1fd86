print(Array.from({ length: 1 }, (e, i) => i * 0), ('\u0041' ? [...[Math.min(null, /[0-9]+/g), [null, , true]]] : ''));
let a3 = [1, 2, 3].next;
const count3 = /x/i;
print(String.raw`a${count3[a3]}b`);
a3 = [Math.max(count3, JSON.stringify(count3)), , { y0: String.raw`a${count3}b` }];
print([((p, q = /ab+c/) => p + q)({ p10: a3, value1: /x/i }), , new Error(10)], (Array.from({ length: 1 }, (e, i) => i * 0), new Set()));
a3 = Math.abs(`t4 ${JSON.stringify(/x/i)} end`, JSON.stringify(~(a3)));
a3--;
eval("[1, 2].length");
