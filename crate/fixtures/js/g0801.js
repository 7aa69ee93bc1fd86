print(Math.floor(1, [[/[0-9]+/g, '0', /[0-9]+/g], (3) && (undefined)]));
;
class Base1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base1(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
print(Base1.make().value);
switch ((function (u) {
return u;
})(Base1)) {
case "x":
for (var k8 in [1, 2]) {
function wrap(count1) {
;
return undefined;
}
print(wrap(2));
}
break;
case 2:
case null:
((p, q = "x") => p + q)(new Date(0));
default:
eval("[1, 2].length");
}
class Base9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base9('\u0041');
}
m2(a) {
return a + this.x;
}
}
class Box8 extends Base9 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box8().value);
((p, q = 255) => p + q)(0);
var w7 = 1;
while (w7 > 0) {
w7--;
Base1 += String(Box8[100]);
}
--Base1;
