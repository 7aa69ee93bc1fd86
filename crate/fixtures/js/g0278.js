class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class Base extends A {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
for (var p7 in { a: 1, b: 2 }) {
try {
Base = ([Base, , '0']) || (Base[true]) > /x/i;
;
} catch (e) {
print(e);
} finally {
++Base;
}
}
print(0.5, Array.from({ length: 0 }, (e, i) => i * 100));
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('0');
}
m0(a) {
return a + this.x;
}
}
class Derived5 extends Derived {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived5().value);
const a4 = !(((p, q = null) => p + q)((Base, Derived)));
if (Array.from({ length: 0 }, (e, i) => i * Infinity)) {
eval("var ev = 3; ev * 2");
A++;
} else {
var w = 0;
do {
w += 1;
} while (w < 4);
}
if (new Set() << [...[a4, new Error()]]) {
var w9 = 1;
while (w9 > 0) {
w9--;
try {
(new Object(10), [...[new Map(), Math.min(Derived, w9)]]);
Base *= JSON.stringify(Object.keys([1, 2]));
} catch (ex4) {
print(ex4);
} finally {
eval("print('e')");
}
}
} else {
eval("print('e')");
}
for (var p4 of [1, 2, 3]) {
if (a4) {
let acc2 = new Array(10);
}
}
A = ({ x: 1, length: 2 })[`t3 ${`t1 ${/[0-9]+/g} end`} end`];
print('hello');
