var w3 = 0;
do {
w3 += 1;
} while (w3 < 1);
try {
var w = 0;
do {
w += 1;
} while (w < 3);
throw new TypeError('abc');
} catch (e) {
print(e);
}
w3 = (((p, q = 2) => p + q)(String(w3)), w3[typeof (true)]);
w3 = Object.keys([1, 2]);
let b = +((new Map() ? w3[1e3] : w3));
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class Derived extends C {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
