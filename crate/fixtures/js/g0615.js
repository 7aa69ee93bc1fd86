print(0.5);
;
var acc = Math.abs(Math.max(Infinity, (undefined) ?? (0)), [...[[...[/x/i, '\u0041']], Object.keys({})]]);
acc = acc;
class A6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A6(/x/i);
}
m2(a) {
return a + this.x;
}
}
class C8 extends A6 {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C8().value);
(function (u) {
return u;
})([]);
eval("print('e')");
if (acc | '\n' + ({ x: 1, length: 2 }).value) {
acc = /ab+c/;
}
