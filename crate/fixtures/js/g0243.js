function helper(res9) {
switch (`t6 ${String.raw`a${[]}b`} end`) {
case 1e3:
--res9;
break;
case '0':
case undefined:
print((res9[res9[res9]], Math.max((res9 ? res9 : false), new WeakMap())));
default:
;
}
if (JSON.stringify(1)) {
print(res9, ((p, q = 0.5) => p + q)((res9[null], new Array())));
} else {
res9++;
res9 = res9;
}
print(arguments.length);
return [String.raw`a${res9 * -1}b`, , String(Array.from({ length: 3 }, (e, i) => i * 100))];
}
helper(1e3);
eval("1 + 2");
var w = 0;
do {
w += 1;
} while (w < 3);
++w;
String.raw`a${(-1 ^ w ? (w) && (0.5) : [w, , false])}b`;
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(0x10);
}
m2(a) {
return a + this.x;
}
}
print(Base.make().value);
++Base;
eval("print('e')");
const item1 = new Array(10);
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(null);
}
m1(a) {
return a + this.x;
}
}
print(A.make().value);
