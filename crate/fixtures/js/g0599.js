var acc7 = [false];
print([...[acc7, ((p, q = true) => p + q)(JSON.stringify(Infinity))]]);
acc7 = (function (u) {
return u;
})(Array.from({ length: 1 }, (e, i) => i * 1));
255;
var w = 3;
while (w > 0) {
w--;
acc7[({ x: 1, length: 2 })[[2, , "x"]]];
}
switch ({ p10: w[0.5], p11: acc7, length2: { value0: Object.keys([1, 2]) } }) {
case null:
switch (JSON.stringify(new Object(3))) {
case 255:
for (var j7 = 0; j7 < 5; j7++) {
j7 = (w.p1, String(j7.p1));
[1, 2, 3][j7[`t2 ${w} end`]];
}
break;
case 0x10:
case /ab+c/:
;
default:
String.raw`a${false}b`;
}
break;
case true:
case 'a,b,c':
print(255, void ([...[new Map(), 10]]));
default:
let n3 = (function (u) {
return u;
})((/ab+c/) ?? (w)) & /ab+c/;
}
print({ length0: Math.pow(acc7, null), p11: ({ x: 1, length: 2 }).p0 } * Math.pow(w & undefined, (function (u) {
return u;
})(false)), []);
{
acc7 &= acc7.p1;
}
try {
const str = String.raw`a${Array.from({ length: 3 }, (e, i) => i * -1)}b`;
acc7++;
throw new Error('');
} catch (e) {
print(e);
} finally {
--w;
}
