var w = 2;
while (w > 0) {
w--;
w++;
}
switch (NaN) {
case false:
w--;
break;
case /ab+c/:
case 'hello':
eval("1 + 2");
default:
const m = String.raw`a${(function (u) {
return u;
})(typeof (0))}b`;
}
print(w.value);
[...[new Error(), [(255) ?? (/x/i), [...[w, 10]]]]];
print(false);
var x1 = { w, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
x1 <<= `t2 ${Array.from({ length: 4 }, (e, i) => i * Infinity)} end`;
eval("1 + 2");
x1 -= JSON.stringify(Infinity);
var w6 = 0;
while (w6 > 0) {
w6--;
print([/[0-9]+/g, w], JSON.stringify([...[!(x1), Object.keys({})]]));
}
print(JSON.stringify(`t7 ${(w6 ? x1 : w)} end`), String.raw`a${Math.abs("x", w6[/ab+c/])}b`);
