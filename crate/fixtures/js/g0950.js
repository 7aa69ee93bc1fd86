;
for (let p0 of 'ab') {
p0++;
}
var w5 = 0;
do {
w5 += 1;
} while (w5 < 1);
class B6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B6(/x/i);
}
m1(a) {
return a + this.x;
}
}
class Derived3 extends B6 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived3().value);
