var tmp = Math.pow(/x/i, ([/ab+c/, , null] ? /[0-9]+/g : (0.5 ? true : /[0-9]+/g)));
print(tmp);
--tmp;
if (((p, q = 1e3) => p + q)((String.raw`a${tmp}b`, Math.max('\n', '0')))) {
var z8 = async function () {
return await null;
};
eval("1 + 2");
} else {
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(true);
}
m0(a) {
return a + this.x;
}
}
class C extends B {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
for (var k4 of 'ab') {
var m = [({ y0: '0', prop1: C, length2: 100 }) || ((function (u) {
return u;
})('abc')), , { next0: undefined }];
}
}
var count3 = u => {
return u;
};
