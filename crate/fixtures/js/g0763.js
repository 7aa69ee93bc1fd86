;
var w = 0;
do {
w += 1;
} while (w < 2);
class Point2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point2(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
print(Point2.make().value);
class Point4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point4(1e3);
}
m0(a) {
return a + this.x;
}
}
print(Point4.make().value);
