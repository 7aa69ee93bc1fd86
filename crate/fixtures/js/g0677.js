eval("[1, 2].length");
print(/x/i);
eval("1 + 2");
class Derived9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived9('a,b,c');
}
m1(a) {
return a + this.x;
}
}
class Point extends Derived9 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
Point = ((p, q = 1e3) => p + q)(String.raw`a${Point}b`);
for (let j4 = 0; j4 < 2; j4++) {
var w = 1;
while (w > 0) {
w--;
switch ([]) {
case 'hello':
w--;
break;
case /[0-9]+/g:
case null:
print(JSON.stringify((function (u) {
return u;
})(1e3)));
default:
let tmp = j4.next;
}
}
try {
var str = JSON.stringify((function (u) {
return u;
})((function (u) {
return u;
})(/ab+c/)));
} catch (err) {
print(err);
} finally {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue outer;
}
}
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
{
print(null);
}
;
