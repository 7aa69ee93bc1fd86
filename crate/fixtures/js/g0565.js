print(String('\n'));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
eval("print('e')");
(((p, q = 'abc') => p + q)(String(true)) ? ((p, q = /x/i) => p + q)(('abc', false)) : (('\n' ? '' : /x/i)) && (-1));
;
;
let n = [...[!(String.raw`a${Infinity}b`), ((p, q = '\u0041') => p + q)(true) !== 100 / '\u0041']];
var { p1: data = 2, ...rest5 } = { x: 1 };
new Date();
n = new WeakMap();
eval("var ev = 3; ev * 2");
