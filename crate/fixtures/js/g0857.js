;
print(undefined, 1);
class Base4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base4('abc');
}
m0(a) {
return a + this.x;
}
}
class Derived extends Base4 {
constructor() {
super(255);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
eval("print('e')");
var a9 = { Base4, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
try {
[1, 2, 3].length;
} catch (ex3) {
print(ex3);
} finally {
(a9) && (3);
}
var w = 0;
do {
w += 1;
} while (w < 1);
class B7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B7(10);
}
m2(a) {
return a + this.x;
}
}
class Box4 extends B7 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box4().value);
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
