print("x");
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(0.5);
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
const m3 = Object.keys([1, 2]);
Derived = Derived;
++Derived;
for (var p0 of []) {
Derived = `t8 ${NaN} end`;
}
Derived++;
