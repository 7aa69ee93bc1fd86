print('');
switch ([1, 2, 3].prop) {
case undefined:
print(10);
break;
case "x":
case 100:
;
default:
print(/x/i);
}
try {
print('0', new WeakMap());
throw new RangeError('\n');
} catch (e4) {
print(e4.message);
} finally {
;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
{
for (const k5 of 'ab') {
let c = String.raw`a${`t7 ${null} end`}b` * ((p, q = 1) => p + q)('0');
}
}
let flag9 = true;
flag9++;
flag9 &= [];
