if ([1, 2, 3].p0) {
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
print(new Set() > w4);
class A6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A6("x");
}
m1(a) {
return a + this.x;
}
}
print(A6.make().value);
} else {
switch ([[(function (u) {
return u;
})(/[0-9]+/g), , 'str'[100]], , /x/i]) {
case /ab+c/:
print(1e3);
break;
case /[0-9]+/g:
case NaN:
Array.from({ length: 2 }, (e, i) => i * 3) >>> Math.round(new WeakMap(), [...[true, null]]);
default:
;
}
{
print(undefined);
}
}
if ([('') || ('hello') % { length0: /[0-9]+/g, next1: false }, , ((/x/i) && (1e3)) && (Math.floor(/ab+c/, /ab+c/))]) {
{
function compute(str, z3) {
Infinity;
z3 -= '0';
return ((p, q = Infinity) => p + q)(Math.min(Math.abs(str, null), { value0: str, p01: -1 }));
}
print(compute(true, "x"));
function make() {
print(undefined);
print(-1);
if (new.target) {
print('ctor');
}
print(arguments.length);
return (function (u) {
return u;
})('\n');
}
print(make());
}
;
try {
var w = 0;
while (w > 0) {
w--;
w--;
}
;
throw new Error('abc');
} catch (ex7) {
print(ex7.message);
}
}
print(-1);
eval("1 + 2");
function h(val5) {
var z7 = (u, v = null) => u + v;
Math.max([val5, , '\n'], (val5 ? z7 : 0x10)) % String(Object.keys({}));
if (new.target) {
print('ctor');
}
print(arguments.length);
return val5;
}
h(/x/i);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
try {
;
var w3 = 0;
while (w3 > 0) {
w3--;
w3 -= JSON.stringify(new Date());
}
} catch (ex) {
print(ex);
}
function check6(data5, b) {
function helper2(acc) {
eval("print('e')");
acc;
data5 &= ((p, q = true) => p + q)(new Date(3));
return [Array.from({ length: 1 }, (e, i) => i * 3), , Array.from({ length: 0 }, (e, i) => i * 2)];
}
print(helper2('\u0041'));
debugger;
;
print(arguments.length);
return (Array.from({ length: 2 }, (e, i) => i * 100), ~([b, '', /[0-9]+/g]));
}
print(check6(undefined, 'hello'));
