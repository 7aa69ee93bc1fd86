;
/ab+c/;
if ('0') {
eval("print('e')");
print(null);
} else {
{
;
print(String(Array.from({ length: 2 }, (e, i) => i * 10)), JSON.stringify((false, new Array())));
}
eval("var ev = 3; ev * 2");
}
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point('\n');
}
m2(a) {
return a + this.x;
}
}
print(Point.make().value);
for (const p7 in [1, 2]) {
if (String(p7)) {
switch (String([(0, 'hello'), , [true]])) {
case 0.5:
Point--;
break;
case null:
case -1:
print(String.raw`a${('\n' ? Object.keys({}) : Point)}b`, String(`t8 ${Math.abs(0, Point)} end`));
default:
Point <<= (`t2 ${[p7, , '']} end` ? JSON.stringify([...[p7, null]]) : p7);
}
}
}
;
function f(n0, obj) {
if ((function (u) {
return u;
})(-1)) {
eval("print('e')");
} else {
({ y0: new WeakMap(), prop1: ((n0, null) ? n0 : Object.keys([1, 2])), next2: new Date(3) });
obj--;
}
Point = (function (u) {
return u;
})(Math.sqrt(Math.min(Point, '\n'), Object.keys([1, 2])));
try {
obj = Math.min(/[0-9]+/g, (function (u) {
return u;
})((obj, Infinity)));
} catch (e4) {
print(e4.message);
}
if (new.target) {
print('ctor');
}
return [...[(JSON.stringify(/ab+c/) ? [...[obj, /x/i]] : [-1]), null]];
}
print(f(true, false));
