;
print(Math.abs(({ x: 1, length: 2 })[/[0-9]+/g * false], new Set()));
;
if (Math.round(`t2 ${undefined} end`, [1, 2, 3].length)) {
{
class Derived3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived3(undefined);
}
m2(a) {
return a + this.x;
}
}
class Base2 extends Derived3 {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base2().value);
;
}
;
switch ((function (u) {
return u;
})(new Date())) {
case '0':
class Base8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base8(10);
}
m1(a) {
return a + this.x;
}
}
class Derived8 extends Base8 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived8().value);
break;
case 255:
case 'hello':
eval("var ev = 3; ev * 2");
default:
;
}
} else {
if (Object.keys([1, 2])) {
if (([/x/i >= undefined] ? Object.keys([1, 2]) : { next0: ((p, q = 'a,b,c') => p + q)('\u0041'), p11: [...[/x/i, 3]] })) {
print(String.raw`a${{ value0: '\u0041', prop1: 'str'.value }}b`);
}
const y2 = String.raw`a${(function (u) {
return u;
})(`t2 ${NaN} end`)}b`;
}
print(false);
}
for (var j3 = 0; j3 < 3; j3++) {
for (let i5 = 0; i5 < 3; i5++) {
print(String(String.raw`a${(1 ? j3 : 1e3)}b`));
10;
}
print(new Array(0));
}
