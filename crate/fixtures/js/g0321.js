;
eval("[1, 2].length");
var w = 0;
while (w > 0) {
w--;
w |= `t0 ${w} end`;
}
const item = (w.x ? [1, 2, 3].next : [false, w]) / new Array();
++w;
try {
;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
throw new TypeError('\u0041');
} catch (ex7) {
print(ex7);
}
for (let i = 0; i < 3; i++) {
w = `t6 ${(+(i) ? 'str'[item] : String(3))} end`;
;
}
var str9 = Object.keys({});
print(null);
