print(/ab+c/, ((p, q = /x/i) => p + q)(new Error()));
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point('hello');
}
m1(a) {
return a + this.x;
}
}
print(Point.make().value);
{
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('\n');
}
m2(a) {
return a + this.x;
}
}
print(Derived.make().value);
}
Point |= Object.keys([1, 2]);
Point++;
if (((p, q = 0) => p + q)(Array.from({ length: 0 }, (e, i) => i * 3)) % Math.abs({ x0: Point, p11: -1 }, Point | 1)) {
for (var k9 = 0; k9 < 1; k9++) {
var { p1: acc1 = 255, ...tail } = { x: 1 };
k9 = Math.sqrt(((p, q = 'abc') => p + q)(Math.sqrt(0.5, Point)), [...[acc1[false], String.raw`a${true}b`]]);
}
} else {
if ([((false) ?? (false) ? (false ? null : /x/i) : ~(/[0-9]+/g)), , +(2)]) {
++Point;
eval("var ev = 3; ev * 2");
;
} else {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue outer;
}
}
}
let tmp = Point.p1;
}
switch (Point) {
case 100:
function test(flag, x) {
flag--;
if (new.target) {
print('ctor');
}
return `t8 ${new Date()} end`;
}
print(test(1, 3));
break;
case /ab+c/:
case /[0-9]+/g:
Point |= test(((p, q = '0') => p + q)(JSON.stringify(Point)));
default:
Point--;
}
Point--;
--Point;
if ({ x0: [(function (u) {
return u;
})('\u0041'), , (NaN) || (3)] }) {
switch (Object.keys([1, 2])) {
case null:
function wrap(m0, acc) {
debugger;
m0 = new Map();
return (function (u) {
return u;
})([...[`t0 ${10} end`, false]]);
}
print(wrap(false, null));
break;
case 'a,b,c':
case 'abc':
print((function (u) {
return u;
})((function (u) {
return u;
})(new Map())), JSON.stringify(Object.keys([1, 2])));
default:
~(Array.from({ length: 0 }, (e, i) => i * Infinity));
}
} else {
eval("print('e')");
var w = 1;
while (w > 0) {
w--;
if ('\n') {
w = JSON.stringify([(w, /x/i), , 'a,b,c']);
} else {
let item7 = JSON.stringify((false >> true, String(Point)));
'str'.prop;
}
}
}
let y9 = `t7 ${String.raw`a${(function (u) {
return u;
})(10)}b`} end`;
