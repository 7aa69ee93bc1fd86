print('\u0041');
;
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(0x10);
}
m0(a) {
return a + this.x;
}
}
print(C.make().value);
var b = `t4 ${new Map()} end`;
print(new Set(), Object.keys([1, 2]));
