print(Infinity);
;
print(null);
function run0() {
print(Array.from({ length: 3 }, (e, i) => i * Infinity));
return Array.from({ length: 2 }, (e, i) => i * NaN);
}
print(run0());
;
;
var w5 = 0;
do {
w5 += 1;
} while (w5 < 2);
print(String((function (u) {
return u;
})(w5 - w5)));
for (let i8 = 0; i8 < 4; i8++) {
function test2(b) {
b--;
return [Math.sqrt(b, new Date(0)), , [1, 2, 3].x];
}
print(test2(null));
{
switch (String.raw`a${i8.prop}b`) {
case /x/i:
print(i8, i8);
break;
case '\n':
case 100:
w5 += null;
default:
print(`t7 ${Math.max((false, null), String.raw`a${"x"}b`)} end`, (function (u) {
return u;
})(i8) / (function (u) {
return u;
})(String.raw`a${i8}b`));
}
}
}
for (let k1 of []) {
eval("1 + 2");
}
String.raw`a${[w5, Object.keys({ a: 1 }), w5.p0]}b`;
