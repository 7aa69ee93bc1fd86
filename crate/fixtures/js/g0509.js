;
var w7 = 1;
while (w7 > 0) {
w7--;
for (var j = 0; j < 2; j++) {
let obj = { length0: ((p, q = true) => p + q)((false ? w7 : w7)), next1: Math.abs(((p, q = '\n') => p + q)(w7), typeof (j)), p02: new Date(3) };
for (let p0 in { a: 1, b: 2 }) {
;
}
}
}
--w7;
switch (Array.from({ length: 3 }, (e, i) => i * 0.5)) {
case 100:
class C0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C0(0);
}
m1(a) {
return a + this.x;
}
}
class Derived extends C0 {
constructor() {
super(2);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
break;
case /[0-9]+/g:
case '\u0041':
print(JSON.stringify('hello'));
default:
Derived[((Derived) ?? (w7)) ?? (w7.value)];
}
var obj17 = ((String.raw`a${"x"}b`, Math.sqrt(undefined, null)) ? w7 : w7);
try {
try {
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box('abc');
}
m2(a) {
return a + this.x;
}
}
class A extends Box {
constructor() {
super(-1);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
} catch (err) {
print(err.message);
} finally {
const acc2 = w7;
}
print(Object.keys({ a: 1 }));
} catch (ex) {
print(ex);
} finally {
--w7;
}
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point('hello');
}
m0(a) {
return a + this.x;
}
}
class C extends Point {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
