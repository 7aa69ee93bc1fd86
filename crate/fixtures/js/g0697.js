JSON.stringify(true);
{
;
}
var w1 = 3;
while (w1 > 0) {
w1--;
eval("var ev = 3; ev * 2");
}
{
;
}
print("x", w1[[...[[Infinity, , 0], Object.keys({})]]]);
print((function (u) {
return u;
})(`t3 ${({ x: 1, length: 2 })[/[0-9]+/g]} end`), `t3 ${w1} end`);
var a = (u, v = false) => u + v;
function g() {
eval("print('e')");
print(arguments.length);
return ((p, q = /x/i) => p + q)([...[a[null], String(w1)]]);
}
print(g());
a = new Date(0);
try {
let str = [...[String(w1[a]), ("x" >>> w1 ? Object.keys([1, 2]) : ({ x: 1, length: 2 })[10])]];
print({ y0: 'str'[JSON.stringify(null)], p01: new WeakMap() });
throw new RangeError('\u0041');
} catch (err) {
print(err.message);
}
class A8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A8(null);
}
m2(a) {
return a + this.x;
}
}
print(A8.make().value);
