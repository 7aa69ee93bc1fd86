for (var k in { a: 1, b: 2 }) {
switch ([[]]) {
case /[0-9]+/g:
--k;
break;
case 100:
case true:
;
default:
print(`t2 ${[...[JSON.stringify(undefined), Array.from({ length: 0 }, (e, i) => i * 3)]]} end`);
}
}
;
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(false);
}
m2(a) {
return a + this.x;
}
}
class A3 extends B {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A3().value);
++A3;
++B;
