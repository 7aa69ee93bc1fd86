print(({ x: 1, length: 2 })[(`t4 ${/x/i} end`, [false, , 255])]);
print((({ p00: '\u0041', next1: 'abc' } ? [...[255, '\u0041']] : new WeakMap()) ? `t3 ${String.raw`a${/[0-9]+/g}b`} end` : ({ x: 1, length: 2 })[[...[0x10, false]]]));
{
eval("print('e')");
}
print(`t7 ${((p, q = /x/i) => p + q)(new Map())} end`, String.raw`a${Math.min('hello', true)}b` == [...[Object.keys([1, 2]), [/x/i, -1]]]);
function check() {
var w = 1;
while (w > 0) {
w--;
;
}
let m = { y0: { p00: (/x/i, w), y1: w, p02: 10 } };
if (new.target) {
print('ctor');
}
return (function (u) {
return u;
})((function (u) {
return u;
})([...[w, '\u0041']]));
}
check();
print(typeof (new Object()), Array.from({ length: 4 }, (e, i) => i * 1e3));
