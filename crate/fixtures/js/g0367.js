function g(flag8) {
flag8++;
if (new.target) {
print('ctor');
}
return flag8[[]];
}
print(g(3));
print('abc');
switch ([1, 2, 3].prop) {
case '0':
Array.from({ length: 0 }, (e, i) => i * 0.5);
break;
case true:
case /x/i:
var n3 = [...[`t3 ${String('hello')} end`, [...[null, String.raw`a${NaN}b`]]]];
default:
eval("print('e')");
}
eval("var ev = 3; ev * 2");
class A0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A0(255);
}
m1(a) {
return a + this.x;
}
}
class B3 extends A0 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B3().value);
eval("[1, 2].length");
print((A0.p0, new Object()), (((function (u) {
return u;
})(false), Math.max('0', B3)), -([...[B3, B3]])));
