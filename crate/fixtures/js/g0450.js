print(null);
print(true);
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
m1(a) {
return a + this.x;
}
}
class B extends Point {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
--B;
(~(Point) << String(true) ? 'a,b,c' : '0');
Point++;
