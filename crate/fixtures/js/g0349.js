print((Math.min(({ x: 1, length: 2 }).p1, ('\u0041', /ab+c/)) ? [((p, q = /x/i) => p + q)('a,b,c'), [...[/x/i, 'abc']], '0'] : 0.5));
print({ y0: 'a,b,c', x1: new Array(3) }, '0');
;
function f() {
var w = 0;
do {
w += 1;
} while (w < 2);
{
++w;
}
var w19 = 0;
while (w19 > 0) {
w19--;
--w19;
}
print(arguments.length);
return new Error(0);
}
print(f());
print((function (u) {
return u;
})(((function (u) {
return u;
})(1)) || (Object.keys([1, 2]))));
function wrap() {
print(0x10);
print(false);
var b = 0x10;
print(arguments.length);
return [...[(function (u) {
return u;
})([...['\u0041', 'abc']]), String((function (u) {
return u;
})(b))]];
}
print(wrap());
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
;
let res = (new Object(0) ? 10 : `t1 ${String(/[0-9]+/g)} end`);
print(((p, q = false) => p + q)(void (Object.keys([1, 2]))));
if (new Map()) {
eval("[1, 2].length");
print([[`t7 ${'\n'} end`, , -(/x/i)]], [...[((p, q = '\n') => p + q)({ x0: res }), 'str'[Array.from({ length: 4 }, (e, i) => i * Infinity)]]]);
[];
}
