print([/ab+c/, , String.raw`a${'str'['abc']}b`]);
for (const k3 of 'ab') {
;
}
print(Object.keys({ a: 1 }), String.raw`a${String(String.raw`a${'hello'}b`)}b`);
var c5 = u => {
return u;
};
{
var w = 2;
while (w > 0) {
w--;
eval("print('e')");
}
w--;
}
var w29 = 0;
while (w29 > 0) {
w29--;
eval("var ev = 3; ev * 2");
}
w29++;
var w4 = 2;
while (w4 > 0) {
w4--;
{
for (let k9 of 'ab') {
;
}
}
}
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(/x/i);
}
m2(a) {
return a + this.x;
}
}
class Derived0 extends Derived {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived0().value);
