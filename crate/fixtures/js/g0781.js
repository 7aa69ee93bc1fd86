;
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(1);
}
m1(a) {
return a + this.x;
}
}
print(B.make().value);
let res = B;
print(Array.from({ length: 0 }, (e, i) => i * -1), res);
var { p0: c9 = 10, ...tail5 } = { x: 1 };
