outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
switch (JSON.stringify(Array.from({ length: 3 }, (e, i) => i * 255))) {
case Infinity:
class B4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B4(null);
}
m0(a) {
return a + this.x;
}
}
class Derived extends B4 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
break;
case 0:
case -1:
print((String(B4) >>> ({ x: 1, length: 2 })[/[0-9]+/g], [1, 2, 3].value));
default:
B4++;
}
print(/[0-9]+/g);
;
