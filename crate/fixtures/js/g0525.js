(0x10 ? /[0-9]+/g : (function (u) {
return u;
})('str'.value));
var w5 = 3;
while (w5 > 0) {
w5--;
for (var p7 in { a: 1, b: 2 }) {
p7;
}
}
let tmp8 = Math.abs(String.raw`a${(-1) && (w5)}b`, { prop0: (0.5, w5), length1: w5, prop2: JSON.stringify(w5) });
--tmp8;
(tmp8[`t2 ${'hello'} end`] ? tmp8 : [tmp8.x, new WeakMap()]);
const key0 = JSON.stringify({ prop0: tmp8 } | String.raw`a${/ab+c/}b`);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
try {
++w5;
throw new TypeError('\n');
} catch (ex1) {
print(ex1);
} finally {
{
var w = 0;
do {
w += 1;
} while (w < 1);
}
}
