var w8 = 1;
while (w8 > 0) {
w8--;
--w8;
}
print([w8, , ((p, q = true) => p + q)(new Date())]);
let val3 = (new Date(10), /[0-9]+/g);
if ([Object.keys({})] ^ ((p, q = '0') => p + q)(null) << val3.value) {
{
print(Object.keys({}));
let m = (String.raw`a${((p, q = 10) => p + q)(val3)}b`, (function (u) {
return u;
})(new Date()));
}
}
eval("1 + 2");
eval("[1, 2].length");
--val3;
var w = 2;
while (w > 0) {
w--;
w8 = String.raw`a${{ x0: { prop0: w }, value1: [w8, , w] }}b`;
}
if ('str'.length) {
print([1, 2, 3].prop, true);
} else {
if ([...[null, (((p, q = NaN) => p + q)(val3), false)]]) {
print({ y0: w8 });
var w19 = 0;
do {
w19 += 1;
} while (w19 < 3);
}
print(String.raw`a${([val3, , val3]) && (((p, q = /[0-9]+/g) => p + q)(val3))}b`, Object.keys([1, 2]));
}
