eval("1 + 2");
print(null);
/[0-9]+/g;
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B("x");
}
m0(a) {
return a + this.x;
}
}
print(B.make().value);
print(Math.round({ p10: 0, p01: new WeakMap(), next2: Math.sqrt(/x/i, B) }, Math.floor([100, B], Math.round(2, true))), B[(Array.from({ length: 1 }, (e, i) => i * 0.5), typeof (/x/i))]);
print(String({ prop0: B, next1: B }) < Array.from({ length: 2 }, (e, i) => i * 0x10), -(JSON.stringify([B, , B])));
for (var k8 of 'ab') {
print(Object.keys({ a: 1 }));
}
--B;
for (let j3 = 0; j3 < 3; j3++) {
j3 = B;
debugger;
}
var a2 = new WeakMap();
var w0 = 0;
while (w0 > 0) {
w0--;
if ({ p00: Object.keys({}), value1: (String('hello') ? ((p, q = 0) => p + q)(/[0-9]+/g) : (a2, B)), x2: -(({ x: 1, length: 2 }).next) }) {
var w = 0;
while (w > 0) {
w--;
'str'[Math.round({ length0: w }, Array.from({ length: 0 }, (e, i) => i * 1e3))];
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(null);
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
B = [([...[a2, 1e3]], (1e3) ?? (Box)), , 100];
}
}
