[...[!([0, , '\u0041']), (function (u) {
return u;
})(String(2))]];
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(2);
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
function g(data, arr2) {
print('hello', (Math.max([/x/i, , Derived], Derived), new Array(0)));
function check1() {
Math.max(Array.from({ length: 2 }, (e, i) => i * 0), data);
print(arguments.length);
return ([...[Derived.y, ((p, q = '\n') => p + q)(false)]]) ?? ([{ x0: 0, y1: '\u0041', x2: '' }, , (/x/i, /x/i)]);
}
print(check1());
var val = { arr2, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
if (new.target) {
print('ctor');
}
return [-([arr2, 0]), (Object.keys({ a: 1 }), `t2 ${arr2} end`), `t6 ${[0.5]} end`];
}
g(0, /ab+c/);
{
-({ y0: Object.keys({}), y1: [1, 2, 3][Derived], next2: -(/x/i) });
;
}
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(true);
}
m1(a) {
return a + this.x;
}
}
class A1 extends Base {
constructor() {
super("x");
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A1().value);
Base--;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
function make() {
function wrap() {
print([Math.abs(Base[Base], /[0-9]+/g), A1, Array.from({ length: 4 }, (e, i) => i * 0.5)], { x0: new Date(10), p11: new Map() >= Base / true, p12: `t1 ${Array.from({ length: 4 }, (e, i) => i * NaN)} end` });
eval("var ev = 3; ev * 2");
print(arguments.length);
return Base.p1;
}
print(wrap());
print(arguments.length);
return ((p, q = false) => p + q)(Math.round([1, 2, 3].value, { y0: Base }));
}
make();
--A1;
print(Math.max([1, 2, 3][[...[/[0-9]+/g, A1]]], /ab+c/));
