;
print(`t8 ${[] == '0'} end`, true);
var w = 3;
while (w > 0) {
w--;
print((!(w.y) ? ((p, q = true) => p + q)(('a,b,c' ? w : w)) : ((function (u) {
return u;
})(/ab+c/), JSON.stringify(/ab+c/))), Object.keys([1, 2]));
}
w = w !== JSON.stringify(w) == w.y;
function f(flag6) {
w++;
Object.keys({ a: 1 });
return Math.min([(flag6 ? flag6 : w)], { x0: null >> /[0-9]+/g });
}
f(0);
w = f(JSON.stringify(JSON.stringify(w)));
for (var k in [1, 2]) {
switch (w) {
case 0x10:
print([...[w, (Array.from({ length: 4 }, (e, i) => i * 0x10)) || ([])]]);
break;
case '':
case /ab+c/:
k |= ((p, q = false) => p + q)((w[k]) && (String(k)));
default:
w -= (((function (u) {
return u;
})(0.5), { p10: null, p01: k, p02: k }), Math.min(`t4 ${10} end`, ((p, q = /x/i) => p + q)('0')));
}
}
if (new WeakMap()) {
for (var k9 = 0; k9 < 5; k9++) {
;
`t5 ${Math.max((/[0-9]+/g ? /[0-9]+/g : w), [k9, , k9])} end`;
}
w = NaN;
}
for (var i = 0; i < 2; i++) {
for (let j6 = 0; j6 < 1; j6++) {
j6++;
for (let j5 = 0; j5 < 5; j5++) {
--j5;
i++;
}
}
var val = (u, v = 2) => u + v;
}
for (const p of []) {
w = String.raw`a${{ x0: new Set(), p11: String.raw`a${/[0-9]+/g}b` }}b`;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
