switch (Object.keys({})) {
case 2:
let tmp9 = JSON.stringify(({ x: 1, length: 2 }).next);
break;
case /[0-9]+/g:
case true:
const key = JSON.stringify(["x", , tmp9] >= tmp9 >> tmp9);
default:
tmp9 *= ([...[{ p10: /[0-9]+/g }, new WeakMap()]] ? Array.from({ length: 1 }, (e, i) => i * 100) : JSON.stringify(!(0x10)));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
eval("var ev = 3; ev * 2");
print(/[0-9]+/g);
Math.pow(Array.from({ length: 2 }, (e, i) => i * -1), [String(true), , new Array()]);
{
;
;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
print(1e3, Object.keys({}));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
