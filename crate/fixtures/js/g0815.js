var flag = Object.keys([1, 2]);
--flag;
flag++;
class A3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A3(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
print(A3.make().value);
