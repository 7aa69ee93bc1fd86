eval("print('e')");
;
;
;
let count7 = Object.keys([1, 2]);
eval("print('e')");
print({ p10: `t0 ${count7} end`, p01: JSON.stringify(count7), prop2: (({ x: 1, length: 2 }).prop) && ('\n') }, String(count7) / 1e3 != `t8 ${'abc' ^ count7} end`);
;
var { prop: count = '\n', ...rest } = { x: 1 };
var [c, , ...tail7] = [undefined, 2, 3];
