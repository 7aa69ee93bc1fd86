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
m2(a) {
return a + this.x;
}
}
class Point3 extends Point {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point3().value);
for (let p1 in [1, 2]) {
p1--;
}
Point *= ((JSON.stringify(Point) ? [Point3, , Point3] : (false, 100)) ? new Object() : ([false, Point3, 100]) || (((p, q = 'hello') => p + q)(Point)));
Point = (function (u) {
return u;
})(`t1 ${JSON.stringify(Point3)} end`);
debugger;
