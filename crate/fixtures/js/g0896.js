print(/x/i);
Math.floor(Math.abs(JSON.stringify(true), /x/i), ((p, q = false) => p + q)(Object.keys({ a: 1 })));
{
try {
var w = 0;
while (w > 0) {
w--;
const acc = String(({ p10: w, p01: 'hello' } ? (10, /ab+c/) : false >= '\u0041'));
}
throw new Error('hello');
} catch (err) {
print(err);
}
if ([...[((p, q = /ab+c/) => p + q)('str'[0]), ([1, 2, 3][false] ? true : new Array())]]) {
var item15 = [1, 2, 3].p1;
if (({ x: 1, length: 2 }).y) {
print(`t8 ${[JSON.stringify(item15)]} end`, [item15, , Math.round(/x/i, null)]);
var a = void ((String.raw`a${null}b` ? Math.min(item15, '\u0041') : [true, '\u0041', 'a,b,c']));
} else {
item15 = new Object();
print(new Object(1) ^ /[0-9]+/g);
}
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
var w9 = 0;
do {
w9 += 1;
} while (w9 < 1);
{
try {
for (let i1 = 0; i1 < 2; i1++) {
++w9;
print(w9[String([w9, , i1])]);
}
;
} catch (e6) {
print(e6.message);
}
}
print(w9);
w9--;
;
++w9;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
