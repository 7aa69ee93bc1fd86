String([...[true - 1, '']]);
debugger;
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
class Base6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base6(Infinity);
}
m2(a) {
return a + this.x;
}
}
class Point extends Base6 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
}
print(100);
;
for (var k of []) {
;
}
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
