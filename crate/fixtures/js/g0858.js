var w = 1;
while (w > 0) {
w--;
var w13 = 2;
while (w13 > 0) {
w13--;
for (var j = 0; j < 2; j++) {
var str6 = new Object();
const n = w;
}
}
}
if ([[[...[/x/i, true]], w, ((p, q = 2) => p + q)('a,b,c')], , ~(('\n', w))]) {
w = new Map();
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
} else {
print(Array.from({ length: 3 }, (e, i) => i * 3));
}
;
var acc0 = ((p, q = 0.5) => p + q)(String(undefined));
;
w;
const str = [...[String.raw`a${acc0}b`, Array.from({ length: 3 }, (e, i) => i * 0)]];
function h1(data, acc) {
var w14 = 0;
do {
w14 += 1;
} while (w14 < 3);
;
for (var j2 = 0; j2 < 1; j2++) {
print(({ x: 1, length: 2 })[JSON.stringify(NaN)]);
debugger;
}
if (new.target) {
print('ctor');
}
return `t3 ${w} end`;
}
print(h1(/x/i, false));
;
{
++acc0;
var w3 = 0;
do {
w3 += 1;
} while (w3 < 2);
}
w *= [...[([acc0, , acc0] ? w >= 'a,b,c' : h1(/x/i, w)), JSON.stringify(str)]];
