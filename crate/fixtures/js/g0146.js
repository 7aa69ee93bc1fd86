print(JSON.stringify(/x/i), [[1, 2, 3].x, new Set() < new Error(1)]);
void (/ab+c/ >= 10) ^ Array.from({ length: 3 }, (e, i) => i * 0x10);
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
print(w1, w1[('\n') || ([...[false, 'abc']])]);
if ({ p10: (['\n', , undefined] ? [2, /x/i] : JSON.stringify(/x/i)) }) {
for (var p8 in [1, 2]) {
w1 = Math.pow((1e3, w1), /ab+c/);
}
var { next: b = /x/i, ...rest } = { x: 1 };
} else {
var w = 0;
do {
w += 1;
} while (w < 3);
print(w, String(/x/i));
}
var b8 = (u, v = 2) => u + v;
for (var k of 'ab') {
--w1;
}
for (var j6 = 0; j6 < 5; j6++) {
{
var flag0 = Array.from({ length: 0 }, (e, i) => i * 2);
switch (new Error()) {
case /ab+c/:
(w1) || ((b8[b8], j6 !== null));
break;
case /[0-9]+/g:
case '0':
var y = String.raw`a${void ({ p00: 'a,b,c' })}b`;
default:
j6 = [Object.keys({}), , new Date()];
}
}
print(((((p, q = 'hello') => p + q)(/[0-9]+/g)) && (/x/i)) ?? (w1[((p, q = 0x10) => p + q)(false)]));
}
