print(/ab+c/);
(String.raw`a${(function (u) {
return u;
})('0')}b`, /x/i);
function run9() {
print(/x/i);
print(1);
return ['\u0041', String.raw`a${[]}b`];
}
run9();
const item3 = [JSON.stringify('\n') >> [1, 2, 3].value, , new Set()];
class Point0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point0(/x/i);
}
m0(a) {
return a + this.x;
}
}
class A extends Point0 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
Point0++;
eval("print('e')");
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
class Point4 extends C {
constructor() {
super('abc');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point4().value);
