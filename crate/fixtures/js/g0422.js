print(([((p, q = /ab+c/) => p + q)(undefined)], new Array()));
print(true);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
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
return new A('0');
}
m2(a) {
return a + this.x;
}
}
class Derived extends A {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
++A;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
try {
var w = 0;
do {
w += 1;
} while (w < 2);
throw new Error('hello');
} catch (ex) {
print(ex);
} finally {
var key6 = [];
}
