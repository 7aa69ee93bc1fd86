new Date();
let c = Object.keys({});
for (var j2 = 0; j2 < 3; j2++) {
++c;
if (`t4 ${c} end`) {
++c;
j2 = 3;
} else {
c++;
}
}
print(String.raw`a${[[255, , 'abc'], (c, c), c[false]]}b`);
print({ value0: c[c], p01: c, x2: c });
c += '0';
for (const p1 in { a: 1, b: 2 }) {
c = ((p, q = 1e3) => p + q)(`t2 ${/ab+c/} end` >= /x/i);
}
print([[...[Array.from({ length: 3 }, (e, i) => i * Infinity), JSON.stringify(c)]], ('abc', /[0-9]+/g) ^ c[NaN]], 'str'[Array.from({ length: 3 }, (e, i) => i * NaN)]);
var w8 = 0;
while (w8 > 0) {
w8--;
eval("print('e')");
}
'a,b,c';
w8 -= Math.abs(`t0 ${c} end` >> (function (u) {
return u;
})(c), (function (u) {
return u;
})(String.raw`a${10}b`));
