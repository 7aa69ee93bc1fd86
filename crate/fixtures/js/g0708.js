for (var i9 = 0; i9 < 4; i9++) {
String([]);
var w9 = 2;
while (w9 > 0) {
w9--;
--w9;
}
}
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
print(/ab+c/);
}
for (let i1 = 0; i1 < 3; i1++) {
const x2 = new WeakMap();
var w = 2;
while (w > 0) {
w--;
try {
w = (function (u) {
return u;
})([...[x2 / w, Array.from({ length: 2 }, (e, i) => i * 2)]]);
} catch (ex0) {
print(ex0);
}
}
}
{
if ([...[Object.keys([1, 2]), { p00: String.raw`a${null}b`, next1: new Map(), next2: [1, 2, 3].x }]]) {
var w0 = 1;
while (w0 > 0) {
w0--;
++w0;
}
print(w0, Object.keys({}));
if (void ((function (u) {
return u;
})((function (u) {
return u;
})(/[0-9]+/g)))) {
w0--;
eval("1 + 2");
}
}
}
