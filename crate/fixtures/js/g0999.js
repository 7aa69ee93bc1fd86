let obj = (function (u) {
return u;
})(`t8 ${true} end`);
{
try {
print(!(((undefined) ?? (-1)) || (('0' ? '0' : obj))), JSON.stringify(((p, q = /[0-9]+/g) => p + q)(obj.x)));
} catch (err1) {
print(err1);
}
}
obj = obj[-(/[0-9]+/g)] == Array.from({ length: 1 }, (e, i) => i * 255);
{
eval("print('e')");
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
var key5 = (u, v = /x/i) => u + v;
key5;
