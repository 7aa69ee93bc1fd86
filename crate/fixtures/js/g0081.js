var w6 = 1;
while (w6 > 0) {
w6--;
print((function (u) {
return u;
})(w6.value));
}
w6 = 255;
--w6;
class A3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A3(false);
}
m1(a) {
return a + this.x;
}
}
class A extends A3 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
