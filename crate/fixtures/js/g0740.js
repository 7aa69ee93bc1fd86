new Set();
;
;
var y7 = Array.from({ length: 3 }, (e, i) => i * 0.5);
const obj9 = Object.keys([1, 2]);
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(true);
}
m0(a) {
return a + this.x;
}
}
class Box9 extends C {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box9().value);
y7++;
