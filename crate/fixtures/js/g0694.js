var w = 0;
while (w > 0) {
w--;
for (let k0 = 0; k0 < 1; k0++) {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 2);
k0 = String([...[k0, k0 & k0]]);
}
}
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A("x");
}
m2(a) {
return a + this.x;
}
}
class A4 extends A {
constructor() {
super(1e3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A4().value);
;
for (var k7 of 'ab') {
for (let p1 of 'ab') {
for (const p2 in { a: 1, b: 2 }) {
print(new Object(), JSON.stringify(`t4 ${((p, q = false) => p + q)(-1)} end`));
}
}
}
