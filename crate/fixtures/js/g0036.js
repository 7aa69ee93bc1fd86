{
for (var j2 = 0; j2 < 3; j2++) {
null;
const c7 = j2.value;
}
}
print(undefined);
print([1e3, , Math.pow('hello', null)], [[`t5 ${null} end`, , 1e3], , new WeakMap()]);
var c = (u, v = '0') => u + v;
for (const k of []) {
for (const p6 in { a: 1, b: 2 }) {
print(String(Math.floor(c, /[0-9]+/g)));
}
}
function compute(obj) {
debugger;
switch ([...[{ prop0: `t7 ${1e3} end`, value1: 'abc', length2: ((p, q = 10) => p + q)('a,b,c') }, { length0: new WeakMap() }]]) {
case '\u0041':
;
break;
case Infinity:
case 255:
[{ p00: Array.from({ length: 2 }, (e, i) => i * 10), prop1: new Array(1), next2: `t3 ${false} end` }, , [1, 2, 3][[obj, obj, -1]]];
default:
c = Array.from({ length: 3 }, (e, i) => i * 255) <= { next0: (c) || (obj), y1: c, p02: "x" * c };
}
return Object.keys({});
}
print(compute('hello'));
c++;
{
c = [...[[`t5 ${/ab+c/} end`, , ~(c)], Object.keys({ a: 1 })]];
for (var i = 0; i < 2; i++) {
var w7 = 2;
while (w7 > 0) {
w7--;
print(Object.keys({}));
}
eval("var ev = 3; ev * 2");
}
}
