eval("1 + 2");
;
try {
0x10;
;
throw new TypeError('hello');
} catch (ex2) {
print(ex2);
}
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
class A3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A3('hello');
}
m0(a) {
return a + this.x;
}
}
print(A3.make().value);
print(3, '');
eval("print('e')");
for (var k = 0; k < 2; k++) {
--A3;
for (var i = 0; i < 1; i++) {
k++;
k *= ({ x: 1, length: 2 }).length;
}
}
