for (var k of 'ab') {
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('hello');
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
}
{
print(255);
print(/x/i);
}
var w5 = 0;
do {
w5 += 1;
} while (w5 < 2);
for (const p of 'ab') {
eval("[1, 2].length");
}
eval("var ev = 3; ev * 2");
++w5;
w5 = `t7 ${Array.from({ length: 3 }, (e, i) => i * 10)} end`;
