;
;
class Derived5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived5(true);
}
m2(a) {
return a + this.x;
}
}
class Derived extends Derived5 {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
var w7 = 3;
while (w7 > 0) {
w7--;
var y0 = (u, v = null) => u + v;
}
var w = 0;
do {
w += 1;
} while (w < 3);
print(new Date(3), Derived);
print('\n');
print(new WeakMap(), JSON.stringify(/ab+c/));
Derived |= ((p, q = /x/i) => p + q)(String.raw`a${w7}b`);
