print(undefined);
eval("print('e')");
print(null);
class B8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B8(false);
}
m0(a) {
return a + this.x;
}
}
print(B8.make().value);
for (var i3 = 0; i3 < 1; i3++) {
print(new Date(3));
print(B8);
}
