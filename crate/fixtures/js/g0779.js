var n = ~(/x/i);
try {
--n;
n |= new Array();
} catch (err4) {
print(err4);
}
print([(NaN, Math.floor(n, n)), , ~([...[undefined, '\u0041']])], [Array.from({ length: 3 }, (e, i) => i * 10), , (JSON.stringify(n), n)]);
;
