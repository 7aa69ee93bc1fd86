if ((/ab+c/ ? new Array() : /x/i)) {
print(((p, q = '\n') => p + q)('0'));
;
print(((p, q = 'abc') => p + q)([[/ab+c/, , /x/i], new Date(), String(0.5)]));
}
try {
print(Math.floor([...[((p, q = 3) => p + q)(/x/i), ({ x: 1, length: 2 })[undefined]]], 'str'.y), JSON.stringify((undefined ? "x" : NaN) >> (/x/i) ?? (NaN)));
print(undefined);
} catch (e) {
print(e.message);
} finally {
;
}
print(/ab+c/);
var w = 0;
while (w > 0) {
w--;
var w6 = 3;
while (w6 > 0) {
w6--;
eval("print('e')");
}
}
eval("var ev = 3; ev * 2");
w = w.p1;
w++;
