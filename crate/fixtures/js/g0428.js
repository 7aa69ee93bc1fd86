for (var k of 'ab') {
++k;
}
if (Object.keys({})) {
print(true);
} else {
var w8 = 0;
while (w8 > 0) {
w8--;
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue outer;
}
}
}
}
print(Infinity);
function test(m9) {
for (let k5 = 0; k5 < 4; k5++) {
;
;
}
let str = Math.floor([+(m9), new WeakMap(), String(m9)], (String(m9)) ?? ((m9, m9)));
print(arguments.length);
return [m9[str] + '\n', [String.raw`a${'abc'}b`]];
}
print(test(/x/i));
if (test(((null, /ab+c/), 0 * undefined))) {
;
print(new Set());
}
print('0');
