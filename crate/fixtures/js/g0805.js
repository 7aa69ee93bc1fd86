;
;
eval("print('e')");
print(Object.keys({}), ((p, q = 0.5) => p + q)(Object.keys([1, 2])));
function g(key) {
for (var i = 0; i < 3; i++) {
const m = (((p, q = /x/i) => p + q)([i, , -1]) ? (Object.keys({}) ? String.raw`a${'\n'}b` : (-1) || (/[0-9]+/g)) : 'str'.p1);
let arr = new WeakMap();
}
class Box4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box4(2);
}
m2(a) {
return a + this.x;
}
}
class C0 extends Box4 {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C0().value);
Box4 = Box4[''];
print(arguments.length);
return new Object(1);
}
print(g(100));
print(/x/i);
