/ab+c/;
String([1, 2, 3][new Set()]);
switch (([...[String.raw`a${false}b`, String(undefined)]]) || (Object.keys([1, 2]))) {
case 255:
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
break;
case 255:
case undefined:
print(Math.abs('\u0041', 0), new Map());
default:
print(/ab+c/);
}
print([1, 2, 3].next, ((p, q = 3) => p + q)(({ x: 1, length: 2 })[new Error()]));
var w = 0;
while (w > 0) {
w--;
print(~(String(/ab+c/)), (!(0.5) ? w : (function (u) {
return u;
})(((p, q = 10) => p + q)(w))));
}
eval("[1, 2].length");
