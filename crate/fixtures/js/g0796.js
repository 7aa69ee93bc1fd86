{
;
}
print(new Error(10));
for (const p8 of 'ab') {
print(true);
}
for (let i = 0; i < 1; i++) {
switch (([1, 2, 3].p0) || (/[0-9]+/g)) {
case /x/i:
const a = /ab+c/;
break;
case '\u0041':
case '\u0041':
eval("print('e')");
default:
i--;
}
class Derived0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived0(1);
}
m0(a) {
return a + this.x;
}
}
class Base extends Derived0 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
}
