eval("1 + 2");
var flag = undefined;
var w1 = 3;
while (w1 > 0) {
w1--;
if (([w1, , w1], new Date(3))) {
flag = (JSON.stringify([flag, /[0-9]+/g]) ? new Array(10) : new WeakMap());
{
w1++;
}
print(String((function (u) {
return u;
})(new Map())));
} else {
for (let k6 = 0; k6 < 5; k6++) {
new Date();
`t0 ${void (('a,b,c' ? flag : k6))} end`;
}
let str = new Date();
}
}
var w3 = 0;
while (w3 > 0) {
w3--;
print(Object.keys([1, 2]), [...[[(flag) || (w1), , `t7 ${Infinity} end`], new Set()]]);
}
function wrap() {
try {
`t0 ${`t7 ${(0.5) ?? (flag)} end`} end`;
} catch (err) {
print(err.message);
} finally {
print(1, new Set());
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return flag.next;
}
print(wrap());
undefined;
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue;
}
}
} catch (ex) {
print(ex.message);
}
