print(({ x: 1, length: 2 }).y);
var { y: y7 = 'a,b,c', ...tail } = { x: 1 };
{
function test(obj) {
++obj;
y7 = ([...[(y7, y7), ('a,b,c', 'a,b,c')]] ? y7.prop : { prop0: [...[/[0-9]+/g, NaN]], p11: `t5 ${'0'} end`, p12: { x0: obj } });
print(arguments.length);
return [];
}
print(test(undefined));
{
var w = 0;
while (w > 0) {
w--;
print({ value0: `t2 ${(2, false)} end`, value1: ([...[w, 255]] ? new Array() : new Object()) });
}
{
y7--;
}
}
}
print(Array.from({ length: 0 }, (e, i) => i * 0.5));
for (const p7 in { a: 1, b: 2 }) {
new WeakMap();
}
var w15 = 2;
while (w15 > 0) {
w15--;
print(~(JSON.stringify(new Object(10))));
}
--y7;
{
switch (Array.from({ length: 1 }, (e, i) => i * 1e3)) {
case 'hello':
var w5 = 0;
do {
w5 += 1;
} while (w5 < 4);
break;
case 'hello':
case true:
var c5 = String(w5);
default:
c5 = w15.prop;
}
var flag = (u, v = /ab+c/) => u + v;
}
debugger;
var y = [([/ab+c/, , w15], (function (u) {
return u;
})(NaN)), , ((p, q = /[0-9]+/g) => p + q)(['0', , w15])];
var w8 = 0;
do {
w8 += 1;
} while (w8 < 2);
