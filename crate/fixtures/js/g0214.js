{
for (let p of []) {
try {
p *= String.raw`a${String.raw`a${'a,b,c' > p}b`}b`;
p = (function (u) {
return u;
})([(function (u) {
return u;
})(p), p, Array.from({ length: 1 }, (e, i) => i * 3)]);
throw new RangeError('hello');
} catch (e) {
print(e);
}
}
}
print(true);
print(`t8 ${[...[JSON.stringify(/x/i), (0x10, 'abc')]]} end`, (function (u) {
return u;
})(new Date()));
var w9 = 0;
do {
w9 += 1;
} while (w9 < 3);
if (/[0-9]+/g) {
eval("[1, 2].length");
}
function helper(arr) {
;
var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
print(/[0-9]+/g);
return w9;
}
helper(null);
eval("print('e')");
for (let j = 0; j < 2; j++) {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
}
var w = 0;
while (w > 0) {
w--;
{
new WeakMap();
{
eval("1 + 2");
let count = ((p, q = '') => p + q)(new WeakMap());
}
}
}
