let str0 = 3;
class Box5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box5('hello');
}
m2(a) {
return a + this.x;
}
}
class C extends Box5 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
C++;
switch (str0) {
case 'abc':
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
break;
case '\n':
case undefined:
print(String(String.raw`a${new Date()}b`));
default:
[...[JSON.stringify(C), (Box5, '\u0041')]] + (Object.keys([1, 2]) ? str0 : (/x/i) && (0.5));
}
var [res6, , ...rest0] = [true, 2, 3];
print(Array.from({ length: 1 }, (e, i) => i * NaN));
