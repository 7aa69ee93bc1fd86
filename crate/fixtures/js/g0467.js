{
({ x0: JSON.stringify([1, 2, 3].y), next1: '0' });
}
print(((p, q = /[0-9]+/g) => p + q)(((p, q = /[0-9]+/g) => p + q)(Array.from({ length: 2 }, (e, i) => i * 0.5))), (function (u) {
return u;
})(new Map()));
var w8 = 0;
do {
w8 += 1;
} while (w8 < 4);
w8 |= Object.keys([1, 2]);
switch (String([])) {
case null:
typeof ([{ p00: undefined }, [w8, , w8]]);
break;
case /ab+c/:
case 'abc':
const data = [...[w8['str'.x], JSON.stringify(String.raw`a${null}b`)]];
default:
print(({ prop0: w8 }, (w8, /ab+c/) ^ 0.5 == ''), Object.keys({}) / new WeakMap() * `t7 ${`t0 ${1e3} end`} end`);
}
{
eval("[1, 2].length");
}
for (var k0 = 0; k0 < 4; k0++) {
print(new Object(0));
let x4 = (function (u) {
return u;
})(/ab+c/);
}
w8 = (100) ?? (Array.from({ length: 3 }, (e, i) => i * 100));
eval("var ev = 3; ev * 2");
