class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point('abc');
}
m1(a) {
return a + this.x;
}
}
class Box8 extends Point {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box8().value);
var w = 0;
do {
w += 1;
} while (w < 2);
Box8 -= [w, ((p, q = 3) => p + q)(Math.floor(w, /[0-9]+/g))];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
Point |= (({ p10: Point, length1: w, x2: undefined }, Box8)) && (typeof ([true, Point]));
{
eval("print('e')");
}
print(Array.from({ length: 3 }, (e, i) => i * 255));
print([1, 2, 3].x, w);
Box8 = String(0.5);
