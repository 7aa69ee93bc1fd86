print([new Object(10), , `t7 ${`t7 ${/x/i} end`} end`], String.raw`a${'str'.next}b`);
;
var w = 2;
while (w > 0) {
w--;
print("x", ((Object.keys([1, 2])) || (/x/i)) && (String.raw`a${('0', w)}b`));
}
var w18 = 0;
while (w18 > 0) {
w18--;
for (const p0 in [1, 2]) {
var [a9, , ...tail] = [null, 2, 3];
}
}
switch (new Date()) {
case "x":
w18 = [...[!(+('')), (String(/ab+c/) ? w !== w : typeof (w))]];
break;
case 255:
case 'a,b,c':
w18 <<= ([((p, q = 0x10) => p + q)(w), , w18 + Infinity] ? (((p, q = null) => p + q)(100) ? typeof (/[0-9]+/g) : Array.from({ length: 2 }, (e, i) => i * 3)) : w18);
default:
print(/x/i);
}
w18 = [];
w18 += void (true);
class A7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A7('a,b,c');
}
m1(a) {
return a + this.x;
}
}
class Derived5 extends A7 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived5().value);
