;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
;
;
;
;
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7('\u0041');
}
m1(a) {
return a + this.x;
}
}
class Derived extends Box7 {
constructor() {
super(0x10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
{
Derived = Math.floor(new Map(), `t5 ${Math.pow(Box7, 10)} end`);
const key = '';
}
