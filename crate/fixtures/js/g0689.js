try {
print(null, 1);
throw new Error('\n');
} catch (ex9) {
print(ex9);
} finally {
switch ([]) {
case undefined:
var a2 = ((JSON.stringify('\u0041'), '\u0041'), (Array.from({ length: 4 }, (e, i) => i * NaN), Math.pow("x", '0')));
break;
case '\u0041':
case undefined:
a2 = [{ length0: a2 } < (a2) || (a2), , ~((a2 ? a2 : a2))];
default:
a2++;
}
}
print((!(10) ? [`t7 ${false} end`, , ('\u0041') && (/x/i)] : '\u0041'), Array.from({ length: 2 }, (e, i) => i * 100));
print(2);
print(/ab+c/);
eval("[1, 2].length");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
for (var p in { a: 1, b: 2 }) {
p--;
}
{
;
;
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 2);
function check() {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue outer;
}
}
print(arguments.length);
return 100 < Math.round(w3.y, new Set());
}
print(check());
for (let i = 0; i < 4; i++) {
w3[w3];
if ([check(('0' ? true : 0))]) {
i = `t1 ${w3} end`;
}
}
