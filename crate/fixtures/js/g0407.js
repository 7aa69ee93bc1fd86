print(undefined);
eval("var ev = 3; ev * 2");
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
eval("1 + 2");
;
;
for (let k9 = 0; k9 < 1; k9++) {
String(new Date());
print(new Error());
}
print(1e3);
for (var p9 in { a: 1, b: 2 }) {
for (var k0 = 0; k0 < 1; k0++) {
if ([...[[], []]]) {
print(new Error(), ['str'.value, 255]);
++k0;
} else {
const tmp = Object.keys({});
}
eval("var ev = 3; ev * 2");
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
