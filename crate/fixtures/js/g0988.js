function compute7(data) {
var w = 0;
do {
w += 1;
} while (w < 3);
switch (String.raw`a${(function (u) {
return u;
})(data)}b`) {
case /x/i:
eval("1 + 2");
break;
case 0.5:
case undefined:
data--;
default:
data |= typeof ((function (u) {
return u;
})(typeof (w)));
}
switch ((function (u) {
return u;
})([(function (u) {
return u;
})(w), , null & data])) {
case 1:
;
break;
case /x/i:
case 1:
print(undefined);
default:
print(String.raw`a${Array.from({ length: 3 }, (e, i) => i * 2)}b`);
}
return (String.raw`a${data}b` ? (String(/[0-9]+/g)) ?? (String.raw`a${data}b`) : w.x);
}
print(compute7(null));
{
;
for (var i9 = 0; i9 < 5; i9++) {
for (var j7 = 0; j7 < 5; j7++) {
let str8 = +([[...[/[0-9]+/g, i9]]]);
(i9, Object.keys({ a: 1 }));
}
--i9;
}
}
if ([Object.keys({ a: 1 }), /x/i]) {
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(false);
}
m1(a) {
return a + this.x;
}
}
print(Point.make().value);
print(Object.keys([1, 2]), ((`t8 ${0.5} end`) && (compute7(Point, true))) ?? (new Set()));
} else {
var w24 = 0;
do {
w24 += 1;
} while (w24 < 3);
}
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('a,b,c');
}
m1(a) {
return a + this.x;
}
}
print(Derived.make().value);
switch (new Map()) {
case 3:
Derived--;
break;
case true:
case false:
eval("1 + 2");
default:
print(String((((p, q = undefined) => p + q)(Derived)) ?? (new Map())));
}
try {
;
print(!(JSON.stringify({ p10: Derived, next1: false, y2: Derived })), `t6 ${[(Derived ? Derived : Derived), , (0.5 ? Derived : /ab+c/)]} end`);
} catch (err1) {
print(err1.message);
}
for (let j = 0; j < 1; j++) {
const tmp = j[{ p10: String.raw`a${j}b`, p01: { p00: Derived } }];
j = [(Array.from({ length: 3 }, (e, i) => i * 1e3)) || ([null, , Derived]), , Math.pow(('hello', j), ((p, q = undefined) => p + q)(j))];
}
Derived += String(JSON.stringify(Derived));
{
var w23 = 0;
do {
w23 += 1;
} while (w23 < 3);
var b = ((p, q = false) => p + q)(null);
}
print({ y0: /x/i, p11: +(Derived), x2: (null) && (false) } & [...[Derived, `t8 ${/[0-9]+/g} end`]]);
