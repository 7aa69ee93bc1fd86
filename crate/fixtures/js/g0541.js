outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
(JSON.stringify(null), Math.min(`t6 ${0} end`, (false) || (/ab+c/)));
;
print([0.5, , [({ x: 1, length: 2 })[0], , true]]);
var w6 = 2;
while (w6 > 0) {
w6--;
w6++;
}
w6 = /x/i;
print([{ length0: w6.x }], ((p, q = Infinity) => p + q)(w6.prop));
++w6;
w6;
print(/x/i, [...[w6, { prop0: new Date(10) }]]);
switch (`t1 ${(String.raw`a${/[0-9]+/g}b` ? `t3 ${"x"} end` : new Set())} end`) {
case /ab+c/:
var w1 = 2;
while (w1 > 0) {
w1--;
w1 -= ([w1 <= w6, , w6] ? w6 : [JSON.stringify(/x/i), Array.from({ length: 1 }, (e, i) => i * Infinity), String.raw`a${undefined}b`]);
}
break;
case 0.5:
case Infinity:
;
default:
;
}
