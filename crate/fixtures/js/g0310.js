outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
print(null);
var data0 = u => {
return u;
};
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived("x");
}
m0(a) {
return a + this.x;
}
}
class Base5 extends Derived {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base5().value);
print(Array.from({ length: 0 }, (e, i) => i * 255));
Base5--;
