for (let i5 = 0; i5 < 3; i5++) {
i5 <<= i5.value;
for (var k of 'ab') {
for (var p12 of []) {
p12 = new Object(10);
}
}
}
1;
try {
eval("[1, 2].length");
([...[false, { length0: null }]], Array.from({ length: 4 }, (e, i) => i * 1e3) >= JSON.stringify(0x10));
} catch (ex) {
print(ex);
}
print('0');
eval("print('e')");
var b = (u, v = null) => u + v;
print(`t4 ${new Error(3)} end`);
b |= JSON.stringify((function (u) {
return u;
})(`t1 ${255} end`));
;
var w2 = 3;
while (w2 > 0) {
w2--;
eval("1 + 2");
}
