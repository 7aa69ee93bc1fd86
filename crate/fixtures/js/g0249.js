class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(false);
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
print(Object.keys({}));
class A5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A5(false);
}
m0(a) {
return a + this.x;
}
}
class Base0 extends A5 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base0().value);
var w = 0;
do {
w += 1;
} while (w < 2);
;
function check(m) {
var w19 = 1;
while (w19 > 0) {
w19--;
++w;
}
var w2 = 0;
while (w2 > 0) {
w2--;
w2--;
}
;
print(arguments.length);
return JSON.stringify(0);
}
print(check(/[0-9]+/g));
var [z, , ...rest1] = [/[0-9]+/g, 2, 3];
eval("print('e')");
