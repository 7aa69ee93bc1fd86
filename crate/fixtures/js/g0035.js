var c2 = (function (u) {
return u;
})(JSON.stringify(new Date()));
try {
if ('str'[[/ab+c/, , String.raw`a${0}b`]]) {
function wrap(y, str0) {
print(y.value);
[(function (u) {
return u;
})(Array.from({ length: 1 }, (e, i) => i * Infinity)), , JSON.stringify(/ab+c/) / (y) || (y)];
if (new.target) {
print('ctor');
}
return c2.next;
}
print(wrap('\u0041', 10));
for (var k = 0; k < 4; k++) {
;
k = String.raw`a${new Map()}b`;
}
if (String(JSON.stringify(-(255)))) {
c2 = new Object();
const z = JSON.stringify([((p, q = NaN) => p + q)(c2), , (100 ? /[0-9]+/g : 'abc')]);
;
} else {
const arr8 = [c2.next, JSON.stringify(String(c2)), [...[(c2 ? c2 : /x/i), c2]]];
}
}
} catch (e) {
print(e);
} finally {
var w6 = 3;
while (w6 > 0) {
w6--;
if (Math.pow(((p, q = 10) => p + q)(JSON.stringify('0')), String.raw`a${String(w6)}b`)) {
++c2;
;
} else {
w6 = ((p, q = '\u0041') => p + q)(String(w6));
eval("1 + 2");
}
}
}
for (var i8 = 0; i8 < 1; i8++) {
function run() {
print(new Set());
print(void ([...[new Set(), /ab+c/]]));
;
return `t2 ${Array.from({ length: 3 }, (e, i) => i * 0)} end`;
}
run();
for (let j = 0; j < 3; j++) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue;
}
}
j = run(undefined);
}
}
function compute9(res) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
const b1 = Array.from({ length: 4 }, (e, i) => i * 1);
print(b1, `t1 ${([null, c2], new Object(0))} end`);
if (new.target) {
print('ctor');
}
print(arguments.length);
return `t8 ${[...[res, [...[/[0-9]+/g, b1]]]]} end`;
}
print(compute9(1));
debugger;
[new Object(), , void (String(c2))];
(function (u) {
return u;
})(c2[{ length0: "x" }]);
for (let i = 0; i < 3; i++) {
({ length0: compute9() ^ `t3 ${i} end` });
print(c2[-('str'.p1)], Array.from({ length: 4 }, (e, i) => i * 2));
}
{
print(compute9(c2, compute9(c2)), !(new Set()));
}
