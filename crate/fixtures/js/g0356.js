;
print({ next0: [Math.min(/x/i, '0'), ((p, q = 'abc') => p + q)(null)] });
print(/ab+c/);
;
eval("print('e')");
