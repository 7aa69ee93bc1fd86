if (`t4 ${[1, 2, 3].next} end` ^ typeof (['a,b,c', , false])) {
eval("print('e')");
;
print('');
} else {
;
}
var w7 = 2;
while (w7 > 0) {
w7--;
{
class Point9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point9(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class Box extends Point9 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
for (const p5 in { a: 1, b: 2 }) {
eval("1 + 2");
}
}
}
function run8(b0, item4) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(0.5);
}
m2(a) {
return a + this.x;
}
}
class Base5 extends C {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base5().value);
function g0(y) {
C = Base5[Math.min('\u0041', Object.keys([1, 2]))];
++y;
print(y);
return ((p, q = false) => p + q)((function (u) {
return u;
})(!(Base5)));
}
print(g0(undefined));
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(255);
}
m1(a) {
return a + this.x;
}
}
class B extends Point {
constructor() {
super('');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
print(arguments.length);
return (Point.x, [...[new Map(), 'str'.p1]]);
}
run8(255, 'abc');
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(NaN);
}
m0(a) {
return a + this.x;
}
}
class C2 extends Base {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C2().value);
