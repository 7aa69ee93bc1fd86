const y4 = 1e3;
try {
for (const k in { a: 1, b: 2 }) {
;
}
if (([undefined] ? y4 : y4.length)) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) break;
}
}
} else {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break outer;
}
}
var m = (y4 ? ((p, q = -1) => p + q)('a,b,c') : Array.from({ length: 2 }, (e, i) => i * 100));
}
} catch (e3) {
print(e3);
} finally {
var w = 0;
do {
w += 1;
} while (w < 4);
}
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(true);
}
m1(a) {
return a + this.x;
}
}
class Box extends B {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(undefined);
}
m2(a) {
return a + this.x;
}
}
print(Point.make().value);
eval("[1, 2].length");
print((String.raw`a${new WeakMap()}b` ? String.raw`a${'0'}b` : y4['']), /x/i);
