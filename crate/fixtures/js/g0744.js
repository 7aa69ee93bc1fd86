var acc8 = async function () {
return await Infinity;
};
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(false);
}
m2(a) {
return a + this.x;
}
}
print(B.make().value);
{
var w = 1;
while (w > 0) {
w--;
if (String(w)) {
;
eval("var ev = 3; ev * 2");
} else {
var acc5 = (String.raw`a${w}b`) || (JSON.stringify(String(-1)));
print((0) ?? (w));
}
}
}
switch ((((p, q = 0.5) => p + q)((Infinity, B)), /[0-9]+/g)) {
case /ab+c/:
var count6 = B;
break;
case 3:
case 'abc':
acc8 |= count6;
default:
B++;
}
print(new Array(0));
[acc8, , String.raw`a${[]}b`];
{
for (var k = 0; k < 3; k++) {
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(/x/i);
}
m1(a) {
return a + this.x;
}
}
class C extends C9 {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
;
}
}
eval("[1, 2].length");
acc8 -= '\n';
++B;
acc8++;
