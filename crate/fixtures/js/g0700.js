print(([('\u0041') ?? (NaN)] ? 0 : ((p, q = 100) => p + q)(String('hello'))));
;
print(undefined);
if (`t6 ${'0'} end`) {
var w = 0;
do {
w += 1;
} while (w < 2);
}
eval("print('e')");
{
var w9 = 0;
do {
w9 += 1;
} while (w9 < 2);
}
var y = async function () {
return await '0';
};
--y;
new Map();
var w8 = 3;
while (w8 > 0) {
w8--;
w8 = [w8, , [...[String(w8), false]]];
}
