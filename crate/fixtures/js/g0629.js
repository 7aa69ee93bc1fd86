print((function (u) {
return u;
})(`t3 ${['hello']} end`), 'str'[new Error() >>> []]);
for (var k9 = 0; k9 < 2; k9++) {
var w2 = 0;
do {
w2 += 1;
} while (w2 < 1);
eval("print('e')");
}
print('0', (Array.from({ length: 3 }, (e, i) => i * NaN), `t1 ${(true) ?? (/x/i)} end`));
;
