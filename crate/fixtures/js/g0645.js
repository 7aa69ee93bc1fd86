class B4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B4('hello');
}
m0(a) {
return a + this.x;
}
}
print(B4.make().value);
eval("var ev = 3; ev * 2");
print({ value0: (function (u) {
return u;
})([...[B4, /[0-9]+/g]]) }, ((p, q = undefined) => p + q)(new Object(10)));
eval("[1, 2].length");
