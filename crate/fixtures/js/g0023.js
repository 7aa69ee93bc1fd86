print(/x/i);
[1, 2, 3].length;
var key = (u, v = 0) => u + v;
var [tmp9, , ...tail6] = [0.5, 2, 3];
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class Box extends Point {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
