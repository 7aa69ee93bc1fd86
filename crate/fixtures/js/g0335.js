outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
print(`t4 ${((p, q = 'hello') => p + q)(new Map())} end`, `t5 ${['a,b,c' < 'abc', , Array.from({ length: 1 }, (e, i) => i * NaN)]} end`);
print(/x/i);
;
var w1 = 3;
while (w1 > 0) {
w1--;
function wrap3(z8, b5) {
print(Object.keys([1, 2]));
;
return new Array();
}
print(wrap3('\n', /ab+c/));
}
