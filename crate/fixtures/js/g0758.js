print(new Date());
var tmp5 = null;
print(new Set(), new Date(1));
debugger;
--tmp5;
for (let p4 in [1, 2]) {
p4++;
}
print((function (u) {
return u;
})(tmp5[Array.from({ length: 3 }, (e, i) => i * 3)]), Object.keys({ a: 1 }));
void (Math.sqrt({ prop0: '\u0041' }, (tmp5) || (1e3)));
