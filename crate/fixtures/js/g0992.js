try {
debugger;
{
const flag3 = new Date(0) | 'hello';
print((String.raw`a${new Set()}b` ? (function (u) {
return u;
})(String.raw`a${flag3}b`) : ((p, q = 0) => p + q)(((p, q = "x") => p + q)(flag3))));
}
} catch (ex1) {
print(ex1);
}
for (var k of 'ab') {
let data = JSON.stringify(k);
}
var w9 = 2;
while (w9 > 0) {
w9--;
switch (((p, q = /[0-9]+/g) => p + q)(new Error(3))) {
case /x/i:
print(JSON.stringify([...[String.raw`a${1}b`, [...['\u0041', 'abc']]]]), String((function (u) {
return u;
})({ prop0: w9 })));
break;
case '0':
case 'abc':
let res7 = (((p, q = 'hello') => p + q)('abc') ? String(Object.keys({ a: 1 })) : new Map());
default:
w9++;
}
}
print('\u0041', new Array());
const key = (function (u) {
return u;
})(`t5 ${(function (u) {
return u;
})(w9)} end`);
w9 = +([...[`t2 ${255} end`, (function (u) {
return u;
})(key)]]);
function compute() {
w9 = w9;
print([...[key[(1e3, 1e3)], [...[`t8 ${w9} end`, w9.length]]]]);
{
print(w9);
var b8 = [...[[(key) ?? (key), , (w9) && (null)], /x/i]];
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return [1, 2, 3].value;
}
print(compute());
var w = 0;
do {
w += 1;
} while (w < 1);
