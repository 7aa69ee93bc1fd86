;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
if (new WeakMap()) {
{
var w7 = 0;
do {
w7 += 1;
} while (w7 < 1);
}
eval("[1, 2].length");
;
} else {
;
function run5(y, c) {
;
eval("print('e')");
;
return { x0: (function (u) {
return u;
})(new WeakMap()), next1: [...[String(true), (y, c)]] };
}
print(run5(2, /[0-9]+/g));
}
print(1);
{
Array.from({ length: 1 }, (e, i) => i * Infinity);
}
print(String.raw`a${([...[1e3, /[0-9]+/g]] ? typeof (/[0-9]+/g) : String.raw`a${1}b`)}b`);
;
print('str'['str'.y], String((Array.from({ length: 1 }, (e, i) => i * 0.5) ? false : new Object())));
try {
var b = function (...u) {
return u.length;
};
print((({ x: 1, length: 2 }).p1) || ([(NaN ? true : 0.5)]), JSON.stringify(JSON.stringify(b.next)));
throw new TypeError("x");
} catch (err) {
print(err.message);
}
