for (var k = 0; k < 3; k++) {
eval("var ev = 3; ev * 2");
k += ((p, q = '0') => p + q)(new Map());
}
switch (JSON.stringify(([/[0-9]+/g], undefined))) {
case true:
var w = 0;
do {
w += 1;
} while (w < 1);
break;
case '\u0041':
case 2:
w++;
default:
eval("var ev = 3; ev * 2");
}
const y = String("x") - `t7 ${(/x/i) && ('0')} end`;
switch ('str'[`t8 ${Array.from({ length: 1 }, (e, i) => i * NaN)} end`]) {
case 0:
for (let p in [1, 2]) {
if (JSON.stringify("x")) {
print(!((function (u) {
return u;
})(String(0.5))), (function (u) {
return u;
})({ next0: `t7 ${null} end`, value1: (function (u) {
return u;
})(y), y2: (y) || (p) }));
let count = new Object(10);
} else {
print(p.y, new Map());
y[String.raw`a${'a,b,c'}b` <= (y) && (p)];
}
}
break;
case 255:
case /x/i:
;
default:
print(0x10);
}
