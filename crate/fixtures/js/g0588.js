[{ y0: /x/i }, [Math.pow(false, -1), ((p, q = 1) => p + q)('0'), Array.from({ length: 2 }, (e, i) => i * 100)]];
print(1);
var a = (u, v = 'hello') => u + v;
print(Math.round(JSON.stringify('abc'), a), String.raw`a${(function (u) {
return u;
})("x")}b`);
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/x/i);
}
m1(a) {
return a + this.x;
}
}
class B8 extends C {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B8().value);
