print(false);
print(([...[new Set(), 1]] ? [[...['a,b,c', NaN]], JSON.stringify('')] : Object.keys([1, 2])));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
print((function (u) {
return u;
})(`t6 ${{ p00: 'hello', length1: undefined, y2: '\n' }} end`), false);
