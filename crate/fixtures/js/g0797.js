var data9 = String([Object.keys({}), , new Set()]);
data9++;
for (let k1 of 'ab') {
;
}
++data9;
print(JSON.stringify((`t3 ${/[0-9]+/g} end`) || ((function (u) {
return u;
})(data9))), true == (data9 >>> data9 ? [...[data9, Infinity]] : new Set()));
data9--;
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(Infinity);
}
m1(a) {
return a + this.x;
}
}
class Base extends C {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
Base++;
var w = 3;
while (w > 0) {
w--;
{
++Base;
}
}
const y0 = Base[(/ab+c/, Object.keys([1, 2]))];
print([({ x: 1, length: 2 }).y], Math.pow(({ next0: C, prop1: 1 }) ?? (String(C)), y0[[data9, , /[0-9]+/g]]));
