if (new WeakMap()) {
class C5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C5(/x/i);
}
m1(a) {
return a + this.x;
}
}
print(C5.make().value);
try {
if ((function (u) {
return u;
})('abc')) {
C5++;
;
} else {
print(String(new Array()), 100);
}
class Derived8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived8(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
class B extends Derived8 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
} catch (ex1) {
print(ex1.message);
}
eval("print('e')");
} else {
var [arr1, , ...rest2] = ['a,b,c', 2, 3];
const c = new Array(0);
}
class Box3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box3('');
}
m0(a) {
return a + this.x;
}
}
class Derived extends Box3 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
function run1() {
Derived -= Object.keys({ a: 1 });
print(arguments.length);
return (JSON.stringify(String('0')) ? 1 : String((Derived) || (Derived)));
}
run1();
if ([String(new Array(0)), [[], , String(Derived)], Array.from({ length: 2 }, (e, i) => i * NaN)]) {
print(((p, q = '\n') => p + q)([Derived, , undefined] | Object.keys([1, 2])), Object.keys({}));
} else {
const n0 = Object.keys({});
}
{
Math.pow([[/x/i, , false], , []], Box3);
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
}
switch (JSON.stringify(String(-(Derived)))) {
case /[0-9]+/g:
print(new Date());
break;
case false:
case '\u0041':
Box3 += run1(String.raw`a${Derived.p0}b`, (function (u) {
return u;
})([/ab+c/, Box3]));
default:
--Box3;
}
