print(JSON.stringify([...[String.raw`a${-1}b`, JSON.stringify(2)]]), (undefined ? Array.from({ length: 1 }, (e, i) => i * 3) : !(typeof ('hello'))));
{
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(0);
}
m1(a) {
return a + this.x;
}
}
class Base9 extends C {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base9().value);
for (var j3 = 0; j3 < 1; j3++) {
var w0 = 3;
while (w0 > 0) {
w0--;
;
}
class A0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A0(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(A0.make().value);
}
}
;
if (String.raw`a${Math.pow(({ x: 1, length: 2 }).prop, Object.keys({ a: 1 }))}b`) {
print(/x/i);
}
;
switch (`t3 ${void (((p, q = null) => p + q)(true))} end`) {
case /[0-9]+/g:
function g() {
;
;
eval("1 + 2");
return { x0: [(/x/i) || (undefined), , `t6 ${3} end`] };
}
g();
break;
case 255:
case 'hello':
let c1 = Array.from({ length: 2 }, (e, i) => i * 100);
default:
let arr = ((p, q = /ab+c/) => p + q)((Math.floor(c1, c1)) ?? (String(0)));
}
;
