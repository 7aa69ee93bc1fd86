var count = (function (u) {
return u;
})((~(undefined), -(/ab+c/)));
print(({ length0: `t6 ${/x/i} end`, value1: JSON.stringify(count) }, ({ p10: 'a,b,c', value1: 0x10, y2: count }, new Error())));
const tmp8 = new Date(0);
print('0', String.raw`a${Object.keys([1, 2])}b`);
print(undefined, new WeakMap());
switch (String({ y0: new Error(1), y1: 255, length2: ((p, q = /[0-9]+/g) => p + q)(NaN) })) {
case '\u0041':
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
class Point extends Base {
constructor() {
super(3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
break;
case 'a,b,c':
case 100:
eval("[1, 2].length");
default:
Base = [...[(function (u) {
return u;
})(Math.abs(Base, count)), [((p, q = /x/i) => p + q)(false), , ('a,b,c' ? /x/i : tmp8)]]];
}
count = JSON.stringify(({ x: 1, length: 2 })[(/x/i) ?? (count)]);
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(undefined);
}
m2(a) {
return a + this.x;
}
}
print(A.make().value);
let res3 = '\u0041';
switch (res3) {
case true:
print([...[Object.keys([1, 2]) !== !(NaN), Object.keys({})]]);
break;
case /ab+c/:
case '\n':
const acc = ((p, q = 'hello') => p + q)(((p, q = Infinity) => p + q)(String(/[0-9]+/g)));
default:
print(~(JSON.stringify(Array.from({ length: 0 }, (e, i) => i * 0x10))));
}
