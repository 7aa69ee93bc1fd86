print(String.raw`a${JSON.stringify((0.5) ?? (100))}b`, ({ x: 1, length: 2 }).p1);
print([+(Math.round('abc', /[0-9]+/g)), , Array.from({ length: 0 }, (e, i) => i * 1e3)]);
var w3 = 2;
while (w3 > 0) {
w3--;
w3 -= w3;
}
eval("var ev = 3; ev * 2");
w3 <<= 'a,b,c';
var val = [(new Map() ? (w3, w3) : ((p, q = /x/i) => p + q)(w3)), (function (u) {
return u;
})(new Error())];
var w = 2;
while (w > 0) {
w--;
eval("print('e')");
}
var w7 = 3;
while (w7 > 0) {
w7--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
}
;
