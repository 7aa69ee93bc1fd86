var w = 0;
do {
w += 1;
} while (w < 4);
;
w[([]) && (-(w))];
for (var j3 = 0; j3 < 4; j3++) {
print(100);
{
switch (Array.from({ length: 1 }, (e, i) => i * 100)) {
case false:
++j3;
break;
case /x/i:
case false:
print([1, 2, 3].y);
default:
print(JSON.stringify(([1, 2, 3].x ? 0.5 : ((p, q = /ab+c/) => p + q)(j3))));
}
}
}
;
if ([...[[[...[w, null]], , w[w]], Math.abs(JSON.stringify('\n'), [...[false, null]])]]) {
function h0(arr7) {
arr7 &= JSON.stringify((function (u) {
return u;
})("x")) + new Error();
return arr7;
}
print(h0(1));
let z = Array.from({ length: 3 }, (e, i) => i * 1);
}
let res3 = w;
try {
var w7 = 0;
while (w7 > 0) {
w7--;
print(String.raw`a${JSON.stringify(Math.sqrt(w, w7))}b`, ({ x: 1, length: 2 })[+(w7)]);
}
} catch (ex3) {
print(ex3.message);
} finally {
print((['str'[res3], , /x/i % false], (Math.sqrt(/[0-9]+/g, true)) ?? (Object.keys({ a: 1 }))));
}
