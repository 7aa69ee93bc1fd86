var count7 = function (...u) {
return u.length;
};
function h() {
var w = 0;
do {
w += 1;
} while (w < 2);
return { p00: ({ x: 1, length: 2 })[Object.keys({})] };
}
print(h());
{
eval("print('e')");
}
var w0 = 0;
while (w0 > 0) {
w0--;
var obj = { p10: [new Date(3), ('abc') || ("x"), [/[0-9]+/g]], p01: (count7.value, JSON.stringify(w0)) };
}
new Map();
for (var p of [1, 2, 3]) {
p++;
}
w0 = String.raw`a${new Set()}b`;
w0++;
print(new Array(0), new WeakMap());
var w5 = 0;
while (w5 > 0) {
w5--;
for (let p9 of 'ab') {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break;
}
}
}
}
var w9 = 0;
do {
w9 += 1;
} while (w9 < 2);
