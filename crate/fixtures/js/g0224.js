print({ length0: -(new Date(1)) });
eval("1 + 2");
for (var i7 = 0; i7 < 5; i7++) {
print([...[({ x: 1, length: 2 })[[...[i7, i7]]], new WeakMap()]]);
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('hello');
}
m1(a) {
return a + this.x;
}
}
class Derived extends A {
constructor() {
super(0);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
}
print(100);
print('');
print([...[Array.from({ length: 4 }, (e, i) => i * 2), Array.from({ length: 3 }, (e, i) => i * -1)]]);
var w5 = 1;
while (w5 > 0) {
w5--;
var w = 0;
do {
w += 1;
} while (w < 1);
}
switch (`t5 ${/[0-9]+/g} end`) {
case true:
w5 &= String.raw`a${String.raw`a${/[0-9]+/g}b`}b`;
break;
case /[0-9]+/g:
case false:
;
default:
w5--;
}
var a0 = w5;
for (const k in { a: 1, b: 2 }) {
JSON.stringify(Object.keys({ a: 1 }));
}
try {
[w5.x, String((a0 ? a0 : true))];
;
} catch (ex9) {
print(ex9.message);
}
