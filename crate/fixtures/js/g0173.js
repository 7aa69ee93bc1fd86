outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
for (var k = 0; k < 3; k++) {
var w = 1;
while (w > 0) {
w--;
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('abc');
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
}
w = undefined;
}
debugger;
print(/ab+c/);
eval("var ev = 3; ev * 2");
;
