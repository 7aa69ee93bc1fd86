eval("1 + 2");
;
eval("[1, 2].length");
print((/x/i, [1, 2, 3].p0), String.raw`a${((p, q = '0') => p + q)(/ab+c/)}b`);
