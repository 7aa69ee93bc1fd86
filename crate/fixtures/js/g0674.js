class Derived2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived2(false);
}
m2(a) {
return a + this.x;
}
}
print(Derived2.make().value);
Derived2--;
try {
switch (undefined) {
case true:
var val3 = { val3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
break;
case '\u0041':
case '0':
++Derived2;
default:
const acc2 = [...[{ value0: Array.from({ length: 0 }, (e, i) => i * 0) }, Array.from({ length: 0 }, (e, i) => i * NaN)]];
}
Derived2 -= Object.keys({});
} catch (err) {
print(err);
} finally {
class A5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A5('a,b,c');
}
m2(a) {
return a + this.x;
}
}
class B3 extends A5 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B3().value);
}
eval("print('e')");
Derived2 *= (`t7 ${(100, '0')} end`) || (Math.max(`t3 ${'\n'} end`, /[0-9]+/g));
switch (null) {
case '\u0041':
Derived2--;
break;
case '0':
case null:
;
default:
Derived2--;
}
Derived2--;
--Derived2;
eval("var ev = 3; ev * 2");
var flag = (u, v = '\n') => u + v;
