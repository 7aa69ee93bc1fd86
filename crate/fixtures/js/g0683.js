;
print(JSON.stringify(/[0-9]+/g));
var w5 = 0;
do {
w5 += 1;
} while (w5 < 1);
++w5;
{
-([3 * w5, , [undefined, w5]]);
if (Math.round((function (u) {
return u;
})(null), ((w5, undefined) ? (w5 ? null : '0') : `t2 ${1} end`))) {
w5++;
w5 = w5.value - Math.floor(null >>> w5, w5);
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(true);
}
m0(a) {
return a + this.x;
}
}
class Base6 extends C {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base6().value);
} else {
++w5;
}
}
function compute2() {
function wrap(tmp, n) {
print((w5, ((p, q = undefined) => p + q)(tmp)));
n = (((p, q = /ab+c/) => p + q)(JSON.stringify(/[0-9]+/g)), [[/[0-9]+/g, w5, tmp], `t3 ${undefined} end`]);
return [...[n, !(n[w5])]];
}
print(wrap(1e3, '0'));
if (new.target) {
print('ctor');
}
return new WeakMap();
}
print(compute2());
print(`t4 ${w5.value} end`, String.raw`a${w5['0' != w5]}b`);
w5++;
eval("print('e')");
if (new Object(0)) {
eval("var ev = 3; ev * 2");
function h2() {
print(w5.p1, [...[new Map(), [`t6 ${'a,b,c'} end`]]]);
if (new.target) {
print('ctor');
}
print(arguments.length);
return (function (u) {
return u;
})((w5.prop) ?? (JSON.stringify(w5)));
}
print(h2());
{
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('\n');
}
m2(a) {
return a + this.x;
}
}
print(Derived.make().value);
}
} else {
(`t6 ${Math.min(false, NaN)} end` ? null : ((w5 ? true : NaN), 'str'[w5]));
function make(item) {
item = !(([item, , '\u0041'], compute2(item)));
item = w5.length;
return `t4 ${+(w5 | /x/i)} end`;
}
make('abc');
}
print(new WeakMap(), (w5) && ([...[Math.round(w5, w5), new Date(0)]]));
