var w4 = 2;
while (w4 > 0) {
w4--;
var [c0, , ...rest] = [/[0-9]+/g, 2, 3];
}
if (w4) {
Math.max(String(100), [((p, q = 'a,b,c') => p + q)(/ab+c/)]);
} else {
if ((function (u) {
return u;
})(true)) {
--w4;
} else {
;
var w = 1;
while (w > 0) {
w--;
;
}
}
}
--w4;
w4;
w4 = String.raw`a${JSON.stringify(w4 / w4)}b`;
