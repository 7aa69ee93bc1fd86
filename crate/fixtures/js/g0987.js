print(2);
class B4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B4(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(B4.make().value);
B4 = ([]) ?? ([...[{ length0: 0x10, prop1: true, x2: -1 }, (B4) || ("x")]]);
B4++;
B4 = '\u0041';
;
if (false) {
var val = function (...u) {
return u.length;
};
} else {
for (var p in { a: 1, b: 2 }) {
;
}
function g7() {
B4 = B4;
print(([((p, q = false) => p + q)(1e3), , Object.keys({})] ? B4.x : ([1] ? Math.min('a,b,c', true) : -(10))), [Math.sqrt(void (B4), B4.prop), new WeakMap()]);
return new Object();
}
g7();
}
eval("print('e')");
