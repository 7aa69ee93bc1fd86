;
;
;
var w2 = 1;
while (w2 > 0) {
w2--;
('\n' ? new Date() : (null * w2 ? new Array(10) : [1, 2, 3].next));
}
var w7 = 2;
while (w7 > 0) {
w7--;
var w4 = 0;
while (w4 > 0) {
w4--;
print(String(new Array(10)));
}
}
;
w7.x;
switch ((function (u) {
return u;
})("x")) {
case /x/i:
if (255) {
++w7;
} else {
for (const p in { a: 1, b: 2 }) {
;
}
}
break;
case -1:
case '0':
print({ p00: w7.p1, p01: Array.from({ length: 3 }, (e, i) => i * 100), value2: String(w7) });
default:
print(void (`t3 ${String(10)} end`), Math.sqrt(w7[String('\n')], String([w7, true])));
}
for (const p5 of [1, 2, 3]) {
var w = 1;
while (w > 0) {
w--;
{
eval("var ev = 3; ev * 2");
w7++;
}
}
}
