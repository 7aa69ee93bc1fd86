[[...[(/ab+c/) || (0), [...[true, 0]]]]];
print(null);
var str = /x/i;
for (var k in { a: 1, b: 2 }) {
class A9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A9(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
print(A9.make().value);
}
String.raw`a${-1}b` !== false;
;
eval("var ev = 3; ev * 2");
print(new Set());
