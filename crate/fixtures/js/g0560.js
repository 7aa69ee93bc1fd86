;
eval("var ev = 3; ev * 2");
function wrap() {
print([]);
try {
(Array.from({ length: 4 }, (e, i) => i * 10) ? Array.from({ length: 2 }, (e, i) => i * 2) : ({ next0: null, p01: undefined }) && (new WeakMap()));
print('\n');
throw new Error('0');
} catch (err7) {
print(err7.message);
} finally {
print(undefined);
}
return `t5 ${3} end`;
}
print(wrap());
(wrap([/x/i, , /x/i]) ? String(/[0-9]+/g) : [1, 2, 3][({ x: 1, length: 2 }).y]);
var w = 0;
do {
w += 1;
} while (w < 3);
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(/x/i);
}
m1(a) {
return a + this.x;
}
}
class Base extends Derived {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
--Base;
try {
function test(item1) {
--Derived;
w++;
Array.from({ length: 3 }, (e, i) => i * Infinity);
if (new.target) {
print('ctor');
}
return { value0: '', prop1: Object.keys({}) };
}
print(test(1e3));
} catch (e5) {
print(e5.message);
} finally {
try {
Derived <<= (function (u) {
return u;
})(((Base, Base) ? String.raw`a${Base}b` : ((p, q = null) => p + q)('a,b,c')));
throw new Error('hello');
} catch (e1) {
print(e1.message);
}
}
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
