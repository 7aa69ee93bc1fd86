for (var p6 in { a: 1, b: 2 }) {
try {
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(false);
}
m1(a) {
return a + this.x;
}
}
class A extends Base {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
} catch (e) {
print(e.message);
}
}
print("x", Object.keys({ a: 1 }));
([...['hello', ((p, q = '\n') => p + q)(Infinity)]] ? Object.keys({ a: 1 }) : (function (u) {
return u;
})(JSON.stringify(false)));
for (var k = 0; k < 1; k++) {
switch ([JSON.stringify([k, , 100]), , Array.from({ length: 2 }, (e, i) => i * -1)]) {
case /ab+c/:
k <<= [((p, q = null) => p + q)([1, 2, 3].p0), , (k, ("x") ?? (k))];
break;
case null:
case 'a,b,c':
print(new Error(0));
default:
;
}
let res8 = new Set();
}
print(Infinity);
