try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
} catch (e5) {
print(e5);
}
for (var k = 0; k < 4; k++) {
;
var w = 3;
while (w > 0) {
w--;
eval("1 + 2");
}
}
{
;
}
let tmp = `t6 ${new Array(0)} end`;
print(String(Array.from({ length: 3 }, (e, i) => i * 1e3)));
function h1(y, item) {
eval("var ev = 3; ev * 2");
y++;
if (new.target) {
print('ctor');
}
print(arguments.length);
return item >>> { p00: new Set() };
}
h1(undefined, 2);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
var w9 = 1;
while (w9 > 0) {
w9--;
for (var p in { a: 1, b: 2 }) {
try {
print(p);
} catch (ex) {
print(ex);
}
}
}
var x = function (...u) {
return u.length;
};
print(String(String.raw`a${tmp}b`) >= [tmp, , (function (u) {
return u;
})(x)], [...[String.raw`a${[...[x, tmp]]}b`, tmp]]);
((p, q = 10) => p + q)(/[0-9]+/g);
