outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
[];
if (true) {
print('a,b,c');
} else {
for (let j3 = 0; j3 < 3; j3++) {
if (String.raw`a${String(('hello') || (/x/i))}b`) {
--j3;
}
eval("var ev = 3; ev * 2");
}
debugger;
}
try {
var flag = { x0: String.raw`a${Array.from({ length: 3 }, (e, i) => i * 1e3)}b` };
} catch (err) {
print(err.message);
} finally {
for (let p in [1, 2]) {
;
}
}
try {
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
} catch (e9) {
print(e9.message);
}
for (const p15 of [1, 2, 3]) {
;
}
print(String.raw`a${[Math.min('hello', '0'), String(/[0-9]+/g)]}b`);
print(false);
