eval("[1, 2].length");
print(`t5 ${Math.pow(NaN != -1, 0x10)} end`, false);
print(JSON.stringify([[1, 2, 3].next, (false) ?? (/x/i), String(/ab+c/)]), (String('0') ? String.raw`a${/[0-9]+/g}b` : ((p, q = /x/i) => p + q)(null)) >>> `t1 ${(/x/i ? /[0-9]+/g : null)} end`);
for (var p of []) {
var n4 = (u, v = /x/i) => u + v;
}
print(0.5);
print(({ length0: 10, length1: (100) && (null) }) ?? ('\u0041'));
print(null);
print("x");
var w9 = 0;
do {
w9 += 1;
} while (w9 < 1);
