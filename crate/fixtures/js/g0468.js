class C1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C1(false);
}
m1(a) {
return a + this.x;
}
}
class B extends C1 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
B = B;
B = new Date(10);
var arr = JSON.stringify((function (u) {
return u;
})(0));
var w = 0;
do {
w += 1;
} while (w < 4);
var b = async function () {
return await /x/i;
};
1e3;
eval("print('e')");
