print(NaN);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
;
;
;
for (let k8 = 0; k8 < 1; k8++) {
var { y: res = 'hello', ...tail1 } = { x: 1 };
var n5 = (u, v = 'hello') => u + v;
}
print(0.5);
