for (const p5 of [1, 2, 3]) {
switch ([...[{ p00: JSON.stringify(false), value1: /x/i, length2: (function (u) {
return u;
})(p5) }, (+(false), new Map())]]) {
case 3:
;
break;
case 255:
case undefined:
eval("1 + 2");
default:
print(/ab+c/);
}
}
;
print(!(new WeakMap()), ({ x: 1, length: 2 }).prop);
print({ value0: null, p01: "x", value2: typeof (null) });
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
var w3 = 3;
while (w3 > 0) {
w3--;
eval("[1, 2].length");
}
