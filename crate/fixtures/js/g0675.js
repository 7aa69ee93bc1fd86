class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(true);
}
m2(a) {
return a + this.x;
}
}
class A4 extends Derived {
constructor() {
super(1);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A4().value);
A4++;
var m = [[String.raw`a${Derived}b`, , [...['0', undefined]]], (function (u) {
return u;
})(Derived) == false, JSON.stringify((/ab+c/ ? A4 : 10))];
;
A4 *= [A4, new Object(3)];
