print(/[0-9]+/g);
;
switch ([String(new Date(10)), , (new Object() ? true : new Map())]) {
case true:
print((String.raw`a${Array.from({ length: 0 }, (e, i) => i * 100)}b`, (new Map(), JSON.stringify("x"))), ({ x: 1, length: 2 })[(new Set(), 'hello')]);
break;
case null:
case /ab+c/:
;
default:
;
}
{
print(({ x: 1, length: 2 }).prop);
print([undefined, (JSON.stringify('hello'), String.raw`a${/[0-9]+/g}b`), ((p, q = /[0-9]+/g) => p + q)([1, 2, 3].next)], ('str'[((p, q = false) => p + q)(false)], `t2 ${({ x: 1, length: 2 }).y} end`));
}
;
;
var w = 3;
while (w > 0) {
w--;
print(new Error(1));
}
((p, q = /ab+c/) => p + q)({ prop0: w, y1: [true, , '\u0041'] });
