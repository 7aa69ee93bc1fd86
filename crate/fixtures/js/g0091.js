for (var j = 0; j < 3; j++) {
var w = 0;
do {
w += 1;
} while (w < 2);
{
w &= ((new WeakMap()) && ([1, 2, 3][j])) && (Math.floor([10], `t2 ${100} end`));
}
}
;
;
var w0 = 2;
while (w0 > 0) {
w0--;
var w11 = 0;
do {
w11 += 1;
} while (w11 < 2);
}
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B('\u0041');
}
m2(a) {
return a + this.x;
}
}
class Base9 extends B {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base9().value);
switch (/[0-9]+/g) {
case undefined:
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(0x10);
}
m0(a) {
return a + this.x;
}
}
class Box extends Derived {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
break;
case null:
case 10:
B--;
default:
eval("[1, 2].length");
}
