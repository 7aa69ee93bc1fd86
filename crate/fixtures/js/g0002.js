print({ next0: [Math.abs(/x/i, undefined), , [undefined, , /ab+c/]], prop1: [1, 2, 3].y }, `t0 ${(Math.sqrt('\u0041', /x/i)) ?? ((function (u) {
return u;
})("x"))} end`);
for (const k0 of 'ab') {
;
}
;
print('');
const y = null;
[JSON.stringify(`t0 ${y} end`), , (function (u) {
return u;
})(Array.from({ length: 0 }, (e, i) => i * -1))];
;
switch ('str'.value) {
case "x":
print(false);
break;
case 'hello':
case 'a,b,c':
;
default:
print(Infinity, Object.keys([1, 2]));
}
print((new Array(0) ? y[y] : new Map()) >= y, `t4 ${JSON.stringify(new Set())} end`);
{
print('\u0041');
print(new Array(), ({ value0: (/ab+c/ ? false : /ab+c/) } ? new Set() : { x0: JSON.stringify(true), prop1: JSON.stringify(y) }));
}
;
