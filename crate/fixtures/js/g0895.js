for (var p in [1, 2]) {
--p;
}
eval("1 + 2");
for (var p4 in { a: 1, b: 2 }) {
const key = Object.keys([1, 2]);
}
for (var k in { a: 1, b: 2 }) {
var data9 = { data9, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['abc']: 1, ...{ q: 2 } };
}
let obj6 = `t2 ${[undefined, JSON.stringify(false), { p00: 'abc', length1: true, length2: /x/i }]} end`;
obj6--;
obj6++;
obj6 = Object.keys([1, 2]);
class Base8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base8(false);
}
m0(a) {
return a + this.x;
}
}
print(Base8.make().value);
