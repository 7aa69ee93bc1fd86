{
print([...[((p, q = /[0-9]+/g) => p + q)(('\n') ?? (null)), new Set()]]);
print(false);
}
var b = JSON.stringify((function (u) {
return u;
})(({ x: 1, length: 2 })[NaN]));
for (let p7 of 'ab') {
print(`t4 ${!(`t3 ${b} end`)} end`);
}
++b;
var w = 3;
while (w > 0) {
w--;
w--;
}
for (let k5 = 0; k5 < 5; k5++) {
switch (false) {
case "x":
[`t3 ${(b) ?? ('a,b,c')} end`];
break;
case true:
case false:
((p, q = /ab+c/) => p + q)(({ x: 1, length: 2 }).value);
default:
--k5;
}
eval("1 + 2");
}
b++;
++b;
function compute0(obj) {
[Object.keys({}), , b[/[0-9]+/g] == new Array()];
b;
return ~({ length0: [...['hello', '\n']], y1: -("x") });
}
print(compute0(/[0-9]+/g));
function wrap4(flag, val7) {
var flag3 = (u, v = 2) => u + v;
print(arguments.length);
return -(([w, , "x"] ? { x0: flag, next1: flag, value2: flag } : JSON.stringify('\u0041')));
}
print(wrap4(0.5, /x/i));
var y = JSON.stringify(+(String.raw`a${undefined}b`));
