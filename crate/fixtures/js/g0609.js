class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('0');
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
for (var i5 = 0; i5 < 4; i5++) {
i5 += i5.next;
i5 *= new Map();
}
for (var p of []) {
Base *= [...[new Map(), new WeakMap()]];
}
Base--;
([(255, 3), , Base[Base]] ? (Math.sqrt(undefined, Base) ? ((p, q = undefined) => p + q)("x") : new Object()) : Base.x);
Base *= ((p, q = 'abc') => p + q)({ x0: String('abc'), next1: 'str'.y, length2: (Base ? /[0-9]+/g : NaN) });
if (String((function (u) {
return u;
})(Math.round(Base, Base)))) {
Object.keys([1, 2]);
let res7 = 'str'[Base];
if ([...[/ab+c/, Base]]) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(false);
}
m2(a) {
return a + this.x;
}
}
print(C.make().value);
}
} else {
Base &= null;
function helper(c, z) {
print(String(Array.from({ length: 3 }, (e, i) => i * Infinity)), `t1 ${Array.from({ length: 3 }, (e, i) => i * 255)} end`);
print(arguments.length);
return (new Map(), `t3 ${[...['0', 2]]} end`);
}
helper(true, undefined);
}
var w = 2;
while (w > 0) {
w--;
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('');
}
m1(a) {
return a + this.x;
}
}
class Point extends A {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
}
