function g(item9, n2) {
function compute() {
eval("[1, 2].length");
debugger;
n2 = Array.from({ length: 4 }, (e, i) => i * NaN);
if (new.target) {
print('ctor');
}
print(arguments.length);
return [item9];
}
compute();
;
let y6 = compute();
return new Array();
}
print(g(0x10, 1));
{
print(NaN);
function h(c) {
print(JSON.stringify(String((function (u) {
return u;
})(c))), (function (u) {
return u;
})(JSON.stringify([c, , false])));
let acc2 = [1, 2, 3][Object.keys([1, 2])];
c--;
print(arguments.length);
return acc2[acc2];
}
print(h(true));
}
class Base9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base9(false);
}
m0(a) {
return a + this.x;
}
}
class Box extends Base9 {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
function h2(item2) {
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('\u0041');
}
m1(a) {
return a + this.x;
}
}
print(Derived.make().value);
var y0 = `t1 ${g()} end`;
;
return /ab+c/;
}
h2('0');
