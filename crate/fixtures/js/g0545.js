for (var k in [1, 2]) {
k--;
}
print(String.raw`a${`t3 ${/ab+c/} end`}b`, []);
for (let j = 0; j < 3; j++) {
if (0) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue;
}
}
}
j = [[1, 2, 3].next, , (new Object()) && (new Map())];
}
if (new Date()) {
eval("1 + 2");
} else {
switch ('str'.x) {
case '\n':
function test7(key2, obj) {
obj = ((p, q = /x/i) => p + q)((function (u) {
return u;
})(obj));
print(arguments.length);
return (String.raw`a${(function (u) {
return u;
})(key2)}b`, ([key2], String.raw`a${/[0-9]+/g}b`));
}
print(test7(undefined, true));
break;
case 'a,b,c':
case false:
eval("print('e')");
default:
print(/ab+c/);
}
}
debugger;
switch ([1, 2, 3][new WeakMap()]) {
case undefined:
const tmp9 = [...[new Set(), +(NaN)]];
break;
case 1e3:
case 2:
print(/x/i);
default:
print(new WeakMap(), (JSON.stringify(tmp9 * tmp9), Math.min(Object.keys({ a: 1 }), Math.floor(tmp9, 0.5))));
}
var w3 = 1;
while (w3 > 0) {
w3--;
var data = function* () {
yield /x/i;
yield* [1, 2];
};
}
