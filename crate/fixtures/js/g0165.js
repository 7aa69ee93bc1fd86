/[0-9]+/g;
JSON.stringify(Array.from({ length: 4 }, (e, i) => i * NaN));
{
print(0);
}
switch (undefined) {
case 100:
{
function helper(res) {
res <<= res.p0 == res;
eval("1 + 2");
--res;
return [];
}
print(helper(Infinity));
print(Object.keys({ a: 1 }));
}
break;
case '0':
case '':
print("x");
default:
print((Math.pow((0x10, -1), ['', , ''])) ?? ([]), { p10: (`t8 ${'a,b,c'} end` ? 'abc' : (function (u) {
return u;
})("x")), next1: [] });
}
var w = 2;
while (w > 0) {
w--;
for (var k5 of [1, 2, 3]) {
w = (function (u) {
return u;
})('');
}
}
const m = Object.keys({});
