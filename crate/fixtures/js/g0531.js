debugger;
try {
for (var k = 0; k < 2; k++) {
try {
k++;
throw new TypeError('hello');
} catch (ex7) {
print(ex7);
} finally {
eval("var ev = 3; ev * 2");
}
eval("[1, 2].length");
}
throw new TypeError("x");
} catch (ex8) {
print(ex8);
}
try {
switch (null) {
case null:
for (var i9 = 0; i9 < 3; i9++) {
i9 <<= Math.min(new Map(), i9);
print([...[String([...[i9, i9]]), `t2 ${Math.min('hello', Infinity)} end`]]);
}
break;
case Infinity:
case 10:
;
default:
;
}
print(/x/i);
throw new Error('\n');
} catch (e1) {
print(e1.message);
}
var [data9, , ...tail] = [undefined, 2, 3];
if ({ prop0: Math.sqrt(new WeakMap(), []) }) {
;
print(Object.keys({}), [...[Array.from({ length: 4 }, (e, i) => i * 255), data9]]);
} else {
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(undefined);
}
m0(a) {
return a + this.x;
}
}
class B0 extends Point {
constructor() {
super('hello');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B0().value);
}
const a = (new Set() ? data9.value : [...[(false ? data9 : data9), /x/i]]);
