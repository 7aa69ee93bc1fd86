for (let j = 0; j < 5; j++) {
{
function test(val) {
new WeakMap();
print('hello', val[new Error()]);
print(NaN, Array.from({ length: 3 }, (e, i) => i * 1e3));
return j;
}
print(test(2));
}
var arr8 = ((p, q = false) => p + q)(['a,b,c']) < JSON.stringify(new WeakMap());
}
(function (u) {
return u;
})(undefined);
print(false);
print(((('') || (null), ((p, q = '\u0041') => p + q)(''))) || (null));
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/x/i);
}
m2(a) {
return a + this.x;
}
}
class A extends Base {
constructor() {
super('hello');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
++Base;
A *= ((p, q = /x/i) => p + q)({ p10: { next0: /ab+c/ }, value1: [A, /[0-9]+/g, Base] });
