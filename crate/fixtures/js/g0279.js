for (var p of [1, 2, 3]) {
print((((p, q = /x/i) => p + q)([NaN, , p])) ?? (void (((p, q = '0') => p + q)(p))), new Array(0));
}
function helper(y7) {
y7 -= (function (u) {
return u;
})(Math.max(y7[y7], new Map()));
++y7;
return JSON.stringify(Array.from({ length: 4 }, (e, i) => i * 0));
}
print(helper('0'));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
;
try {
for (var k of []) {
++k;
}
} catch (err) {
print(err.message);
} finally {
[...[0x10, false]];
}
print(1e3);
function run5(res, n) {
res--;
--res;
eval("1 + 2");
return helper(String(res) << res);
}
print(run5(Infinity, null));
function compute4(x) {
switch ((run5(x['a,b,c'], ~(x))) ?? ([('\u0041', 3), ('\u0041', 1e3)])) {
case 'abc':
Array.from({ length: 1 }, (e, i) => i * 0);
break;
case false:
case "x":
[...[JSON.stringify('\u0041'), x]];
default:
x = [Object.keys({ a: 1 }), ((p, q = /[0-9]+/g) => p + q)((100, undefined)), new Map()];
}
print(helper((function (u) {
return u;
})(true)));
return x;
}
print(compute4(''));
;
new Error(10);
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
try {
print(null);
throw new Error('hello');
} catch (ex) {
print(ex);
}
}
