try {
for (let j3 = 0; j3 < 3; j3++) {
print(j3[(Math.sqrt(j3, /[0-9]+/g)) || ('a,b,c')], (j3, j3));
var w5 = 0;
do {
w5 += 1;
} while (w5 < 4);
}
function f3() {
;
print({ p10: (/[0-9]+/g, /[0-9]+/g), p11: Math.abs(/x/i, 10) } >>> /x/i);
print([...[Array.from({ length: 3 }, (e, i) => i * 1e3), (({ x: 1, length: 2 }).y) || (`t3 ${'a,b,c'} end`)]], [1, 2, 3].prop);
if (new.target) {
print('ctor');
}
return new Error(10);
}
print(f3());
throw new TypeError('\u0041');
} catch (e) {
print(e.message);
}
;
function run() {
print(new WeakMap(), Math.min(Object.keys([1, 2]), 255));
var res = function (...u) {
return u.length;
};
return new Error();
}
print(run());
;
