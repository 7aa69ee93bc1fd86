print(/ab+c/, [+(Math.abs(0, 'abc'))]);
Object.keys({});
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
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
m1(a) {
return a + this.x;
}
}
class C extends Base {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
for (var k of []) {
C = Math.abs(0.5, (function (u) {
return u;
})(String(/ab+c/)));
}
var y9 = function (...u) {
return u.length;
};
print(Object.keys({ a: 1 }));
function check3() {
eval("var ev = 3; ev * 2");
return ({ x: 1, length: 2 }).p0;
}
print(check3());
