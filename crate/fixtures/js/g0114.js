print(NaN);
print(((p, q = null) => p + q)(JSON.stringify(String.raw`a${'a,b,c'}b`)), [[String('a,b,c'), ((p, q = /ab+c/) => p + q)('a,b,c'), Object.keys([1, 2])], , /[0-9]+/g]);
print(('', 'str'[('\u0041' ? "x" : '\n')]), Array.from({ length: 2 }, (e, i) => i * 100));
;
;
var n1 = { n1, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['']: 1, ...{ q: 2 } };
n1 = new Object() >= ([false, , 'a,b,c']) || (~(/ab+c/));
const y = Math.round(new Error(), n1);
var w = 2;
while (w > 0) {
w--;
let z = ((p, q = /x/i) => p + q)(((p, q = 100) => p + q)((true ? 'hello' : n1)));
}
w = `t0 ${({ x: 1, length: 2 }).value} end`;
eval("[1, 2].length");
