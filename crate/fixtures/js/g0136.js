(function (u) {
return u;
})(false);
var w3 = 2;
while (w3 > 0) {
w3--;
eval("1 + 2");
}
switch (`t3 ${w3.length} end`) {
case '\n':
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
break;
case /ab+c/:
case 255:
print([(((p, q = 0.5) => p + q)(null)) || (w3), , String(w3[w3])], [String.raw`a${w0.p1}b`, { p00: Array.from({ length: 2 }, (e, i) => i * 100), value1: +(w0) }]);
default:
print((String.raw`a${((p, q = 0) => p + q)(w0)}b` ? 255 : String.raw`a${(/[0-9]+/g ? undefined : w3)}b`), Object.keys([1, 2]));
}
for (var k = 0; k < 5; k++) {
function run(c) {
print(((p, q = /x/i) => p + q)([...[c, JSON.stringify(false)]]), new Map());
print((((p, q = false) => p + q)((/x/i ? 'hello' : /ab+c/))) ?? (Array.from({ length: 3 }, (e, i) => i * 100)));
print(arguments.length);
return (new Set() ? JSON.stringify(new Date()) : (function (u) {
return u;
})(typeof (k)));
}
print(run(/[0-9]+/g));
k++;
}
