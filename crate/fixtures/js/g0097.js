;
switch ('str'.next) {
case /[0-9]+/g:
;
break;
case null:
case /x/i:
;
default:
print(0);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
for (let p of []) {
p = ((null, /[0-9]+/g) / undefined ? Math.min(((p, q = /ab+c/) => p + q)(/[0-9]+/g), `t5 ${p} end`) : JSON.stringify(Array.from({ length: 3 }, (e, i) => i * Infinity)));
}
(((p, q = undefined) => p + q)(new Map())) ?? ({ next0: (false, '\n'), p11: { p00: undefined } });
