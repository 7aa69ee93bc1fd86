eval("[1, 2].length");
var w2 = 2;
while (w2 > 0) {
w2--;
eval("print('e')");
}
print((String(String(w2)), w2.length), [...[Math.max([/ab+c/, w2, /x/i], w2), Array.from({ length: 3 }, (e, i) => i * NaN)]]);
w2;
