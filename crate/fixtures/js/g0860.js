var { length: tmp = 0x10, ...tail2 } = { x: 1 };
for (var p in { a: 1, b: 2 }) {
class A2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A2('0');
}
m1(a) {
return a + this.x;
}
}
print(A2.make().value);
}
var y3 = async function () {
return await /x/i;
};
switch (tmp) {
case 1e3:
({ y0: [...[String.raw`a${tmp}b`, /ab+c/]], length1: /x/i });
break;
case undefined:
case Infinity:
String(tmp);
default:
tmp &= String(Array.from({ length: 3 }, (e, i) => i * 2)) < [JSON.stringify(Infinity), (y3) && (/x/i)];
}
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
return new Derived('\u0041');
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
eval("print('e')");
