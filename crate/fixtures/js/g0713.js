switch (~(({ x: 1, length: 2 }).next)) {
case /x/i:
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
break;
case -1:
case /[0-9]+/g:
var tmp0 = Math.floor([`t5 ${'hello'} end`, , 255], String(null));
default:
tmp0 -= String(/[0-9]+/g);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
var { length: b5 = 100, ...rest5 } = { x: 1 };
var obj = (u, v = '\u0041') => u + v;
