try {
({ x: 1, length: 2 }).prop;
} catch (ex4) {
print(ex4);
} finally {
const x = String(String.raw`a${100}b`);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
[...[String.raw`a${{ y0: false }}b`, 'str'.y]];
switch (`t4 ${"x"} end` >= (JSON.stringify(0), true)) {
case false:
print("x");
break;
case undefined:
case 10:
(String.raw`a${{ length0: '' }}b`, new Error(0));
default:
eval("1 + 2");
}
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
throw new TypeError('a,b,c');
} catch (e) {
print(e.message);
}
;
