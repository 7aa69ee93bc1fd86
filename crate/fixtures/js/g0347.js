switch (String((new Array(10) ? [...['\n', '\u0041']] : 2))) {
case 10:
;
break;
case 'abc':
case 1:
eval("1 + 2");
default:
;
}
print(((p, q = false) => p + q)(({ x: 1, length: 2 })[(false ? /x/i : '\n')]), /[0-9]+/g);
for (var p in { a: 1, b: 2 }) {
print(Math.max((new Set()) || (Math.min(null, p)), Object.keys({})));
}
'abc';
;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
