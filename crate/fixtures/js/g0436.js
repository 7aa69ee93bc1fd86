;
let str5 = ([], ((p, q = '\u0041') => p + q)((/x/i, 3)));
var c6 = async function () {
return await 3;
};
for (var k4 in { a: 1, b: 2 }) {
{
k4++;
const obj1 = [...[String.raw`a${[str5, str5]}b`, c6.prop]];
}
}
eval("1 + 2");
var w8 = 1;
while (w8 > 0) {
w8--;
{
Math.max(((c6 ? false : c6)) && (null), Object.keys({ a: 1 }));
}
}
