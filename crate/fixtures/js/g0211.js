for (let j = 0; j < 3; j++) {
/[0-9]+/g;
function h(b, key5) {
;
return Array.from({ length: 2 }, (e, i) => i * 1e3);
}
h(/x/i, undefined);
}
for (let k of 'ab') {
k = ((k ? -1 : 100) == Math.sqrt(k, /[0-9]+/g) ? JSON.stringify('') : [(k) ?? (k)]);
}
class Base1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base1(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
print(Base1.make().value);
Base1--;
function f0(z, key) {
var c0 = -([1, 2, 3].next);
c0 &= new Array();
if (new.target) {
print('ctor');
}
return key.p0;
}
print(f0(undefined, -1));
for (var j18 = 0; j18 < 4; j18++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
;
}
Base1 = (function (u) {
return u;
})(Array.from({ length: 1 }, (e, i) => i * 2));
switch (String((/ab+c/) ?? (Base1))) {
case 10:
var w = 1;
while (w > 0) {
w--;
print(new Map() === f0());
}
break;
case '\n':
case 1:
print(1e3, [...[(function (u) {
return u;
})(w) <= String.raw`a${Base1}b`, new WeakMap()]]);
default:
print((~(f0(/ab+c/, Base1))) && (Base1), f0(new Map()));
}
