for (var i = 0; i < 4; i++) {
var arr8 = (u, v = 0) => u + v;
;
}
var w = 0;
while (w > 0) {
w--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
}
print(String.raw`a${Math.round(((p, q = 0.5) => p + q)(/x/i), Array.from({ length: 3 }, (e, i) => i * 255))}b`, (Array.from({ length: 3 }, (e, i) => i * -1)) || ({ length0: ~(w), prop1: w }));
var y = { prop0: String([...[1, w]]), p01: `t6 ${(undefined ? w : true)} end` };
switch (String.raw`a${new Date(3)}b`) {
case false:
eval("print('e')");
break;
case /x/i:
case 'abc':
1;
default:
const n3 = [Math.round(w + y, (y) && (true)), JSON.stringify(false / y)];
}
print(new Object());
