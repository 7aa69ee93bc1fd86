var count = (u, v = /[0-9]+/g) => u + v;
function g() {
;
new Date();
;
return +((function (u) {
return u;
})(/ab+c/));
}
print(g());
class Box0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box0(Infinity);
}
m2(a) {
return a + this.x;
}
}
class Point1 extends Box0 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point1().value);
count--;
count = String.raw`a${Box0}b`;
;
var w = 0;
do {
w += 1;
} while (w < 1);
Box0--;
var w10 = 0;
do {
w10 += 1;
} while (w10 < 4);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
