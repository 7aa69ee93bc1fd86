function compute4() {
[Array.from({ length: 2 }, (e, i) => i * Infinity), , undefined];
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue outer;
}
}
;
print(arguments.length);
return /[0-9]+/g;
}
print(compute4());
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
print(/ab+c/);
;
function h(m, m8) {
print(`t1 ${m} end`);
m8 = new WeakMap();
if (new.target) {
print('ctor');
}
return void (+((/x/i) ?? ("x")));
}
print(h(null, /ab+c/));
try {
for (const k in { a: 1, b: 2 }) {
print(/x/i);
}
print([1, 2, 3][((null ? null : 2) ? JSON.stringify(/ab+c/) : String('hello'))], String(new Map()));
} catch (ex9) {
print(ex9);
}
;
let arr = String(compute4(String.raw`a${undefined}b`));
for (var i = 0; i < 4; i++) {
var w = 0;
do {
w += 1;
} while (w < 2);
eval("1 + 2");
}
({ next0: arr.p0, x1: /ab+c/, p12: new Array(3) });
