{
class Box0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box0(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Box0.make().value);
}
for (var i = 0; i < 2; i++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
var w = 1;
while (w > 0) {
w--;
for (var k of []) {
w = true;
}
}
}
var w7 = 3;
while (w7 > 0) {
w7--;
eval("var ev = 3; ev * 2");
}
var w10 = 3;
while (w10 > 0) {
w10--;
function compute2(c) {
w7 = Math.max(String((function (u) {
return u;
})('\u0041')), c);
if (new.target) {
print('ctor');
}
return (Object.keys({})) && (JSON.stringify([w10]));
}
print(compute2(1e3));
}
print([...[([...[w7, true]], (null) ?? ('\u0041')), '']]);
print(Math.sqrt((function (u) {
return u;
})(((p, q = /x/i) => p + q)(w7)), ([], w7)));
{
class C7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C7(false);
}
m0(a) {
return a + this.x;
}
}
print(C7.make().value);
function h(val) {
--C7;
let b = C7.y;
eval("print('e')");
print(arguments.length);
return String.raw`a${(`t0 ${false} end` ? C7 : Object.keys([1, 2]))}b`;
}
print(h(0.5));
}
w10++;
switch (w10[2]) {
case 3:
switch ([w10[[false, /[0-9]+/g, 2]], ((p, q = /x/i) => p + q)(new Date()), new WeakMap()]) {
case 'hello':
try {
w10++;
w7 = ([...[((p, q = /ab+c/) => p + q)(w7), (w7) || (w10)]]) && ([...[Math.min(255, /[0-9]+/g), w10]]);
throw new TypeError('');
} catch (err) {
print(err);
}
break;
case "x":
case /ab+c/:
w7;
default:
w7--;
}
break;
case null:
case 0x10:
w7 *= { y0: [[w7, , w10], ((p, q = null) => p + q)(Infinity), (/ab+c/) ?? (w7)], p11: { p00: typeof (''), prop1: [w7, w10, /[0-9]+/g], x2: String(w7) } };
default:
w10 = JSON.stringify(w7);
}
var w18 = 0;
do {
w18 += 1;
} while (w18 < 3);
eval("print('e')");
