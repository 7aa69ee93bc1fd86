print(({ x: 1, length: 2 }).y, Array.from({ length: 3 }, (e, i) => i * 3));
(String(('hello') && (3))) ?? (({ x: 1, length: 2 }).length);
if (Object.keys([1, 2])) {
print([((p, q = 10) => p + q)((function (u) {
return u;
})(true)), , Object.keys([1, 2])]);
print([[...['abc', /[0-9]+/g]], , String.raw`a${'0'}b`] >>> Object.keys({}), ((true, /[0-9]+/g) | Object.keys({ a: 1 }) ? 1e3 : (Array.from({ length: 2 }, (e, i) => i * 255), [false, , 0])));
}
let item = String.raw`a${typeof (true)}b`;
{
switch (new Error()) {
case 255:
item = item.prop;
break;
case true:
case 0:
({ prop0: new Map(), prop1: String.raw`a${new Set()}b` });
default:
;
}
{
const n0 = JSON.stringify(2);
}
}
