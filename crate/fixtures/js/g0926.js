var w = 2;
while (w > 0) {
w--;
--w;
}
var [z, , ...rest] = [/ab+c/, 2, 3];
eval("[1, 2].length");
var data = (`t5 ${false} end` ? `t0 ${'a,b,c'} end` - ((p, q = '\u0041') => p + q)(z) : new Array());
try {
eval("var ev = 3; ev * 2");
z;
} catch (ex) {
print(ex.message);
} finally {
print(Object.keys({}), String(Object.keys({ a: 1 })));
}
print(~({ y0: new Map() }));
eval("[1, 2].length");
eval("var ev = 3; ev * 2");
switch (`t0 ${`t0 ${data['\u0041']} end`} end`) {
case false:
--w;
break;
case 0:
case undefined:
print([String.raw`a${(function (u) {
return u;
})(w)}b`, , w ^ /x/i]);
default:
z |= ((p, q = NaN) => p + q)([[data, undefined], { value0: /[0-9]+/g, x1: z, p02: data }, Math.min(null, w)]);
}
