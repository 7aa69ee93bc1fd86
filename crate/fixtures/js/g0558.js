;
var w4 = 2;
while (w4 > 0) {
w4--;
var w = 0;
while (w > 0) {
w--;
switch (new Array(10)) {
case undefined:
eval("1 + 2");
break;
case true:
case 3:
print(Array.from({ length: 3 }, (e, i) => i * 0.5));
default:
w--;
}
}
}
print((w4.prop) ?? (+(JSON.stringify(w4))), ([...[false, false]] ? [...[['', w4], new Map()]] : ((p, q = 100) => p + q)((w4 ? w4 : w4))));
eval("1 + 2");
({ p00: Object.keys({ a: 1 }), prop1: w4['0'], prop2: Math.floor(w4 - w4, (w4 ? "x" : w4)) });
