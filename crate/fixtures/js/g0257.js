print(/[0-9]+/g);
;
class B7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B7(-1);
}
m1(a) {
return a + this.x;
}
}
print(B7.make().value);
;
