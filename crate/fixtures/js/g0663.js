{
({ x0: [...[[...[/[0-9]+/g, 'abc']], [...['hello', NaN]]]], p01: 100 });
print(null);
}
print(1e3);
print(/[0-9]+/g);
for (let p9 in { a: 1, b: 2 }) {
try {
switch (String.raw`a${p9}b`) {
case 10:
--p9;
break;
case NaN:
case '\n':
100;
default:
p9 = String.raw`a${`t1 ${'abc' >>> p9} end`}b`;
}
} catch (ex5) {
print(ex5.message);
}
}
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
for (let k0 in [1, 2]) {
;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
