print(/x/i);
var w1 = 0;
do {
w1 += 1;
} while (w1 < 3);
for (let i9 = 0; i9 < 2; i9++) {
print(String(String(i9) === ~(i9)), [...[new Object(), Math.max(new WeakMap(), String.raw`a${w1}b`)]]);
;
}
function check0(a) {
;
if (new.target) {
print('ctor');
}
return Array.from({ length: 1 }, (e, i) => i * 2);
}
print(check0('hello'));
eval("1 + 2");
++w1;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
