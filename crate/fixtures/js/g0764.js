outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
;
eval("[1, 2].length");
eval("print('e')");
;
function wrap6(key9, n2) {
print([...[new Object(), `t1 ${n2[key9]} end`]]);
var w2 = 2;
while (w2 > 0) {
w2--;
const key = new Error();
}
--key9;
if (new.target) {
print('ctor');
}
return String(n2.length);
}
print(wrap6(/[0-9]+/g, '0'));
var w = 0;
do {
w += 1;
} while (w < 4);
if (String(String(String(w)))) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
print(new Date());
} else {
function f7(y0) {
y0 = String({ length0: typeof (y0), next1: String(/ab+c/), next2: ((p, q = NaN) => p + q)(y0) });
print(arguments.length);
return (w[w]) || ([Object.keys([1, 2]), w]);
}
print(f7(/x/i));
var w5 = 0;
do {
w5 += 1;
} while (w5 < 2);
}
{
let acc4 = `t1 ${[(null ? '0' : w), Object.keys({ a: 1 })]} end`;
print({ next0: Object.keys([1, 2]), prop1: Array.from({ length: 3 }, (e, i) => i * 100) }, (w.length) ?? (/[0-9]+/g));
}
