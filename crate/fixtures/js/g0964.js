;
;
print(0.5);
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Point.make().value);
print('str'.x);
eval("print('e')");
if ('str'.value) {
var w6 = 0;
while (w6 > 0) {
w6--;
if ((w6) || (((p, q = NaN) => p + q)(new Date()))) {
w6 = Point;
;
eval("var ev = 3; ev * 2");
}
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
typeof (([...[false, null]], Point));
} else {
function test3(y0) {
;
y0 = ((p, q = '') => p + q)(`t3 ${Point.value} end`);
return ((null) || (y0.next)) && ((function (u) {
return u;
})(new Map()));
}
test3(/[0-9]+/g);
print({ p10: Point }, `t1 ${Math.floor(!(false), [Point, Point, 1])} end`);
}
eval("var ev = 3; ev * 2");
const res = Point;
{
String([((p, q = -1) => p + q)(res), , Math.sqrt('\n', false)]);
print(new WeakMap());
}
