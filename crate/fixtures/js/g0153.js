var w = 3;
while (w > 0) {
w--;
w--;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
String.raw`a${Array.from({ length: 0 }, (e, i) => i * 2)}b`;
print(w[`t6 ${JSON.stringify(undefined)} end`], Array.from({ length: 0 }, (e, i) => i * 100));
{
;
}
w += { x0: !(w), value1: [...[w, '0']], prop2: (w ? w : w) } != w;
w &= w[(String(w)) ?? (w & undefined)];
var w0 = 0;
do {
w0 += 1;
} while (w0 < 2);
var res = w0;
