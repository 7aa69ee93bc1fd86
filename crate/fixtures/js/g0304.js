class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(1);
}
m2(a) {
return a + this.x;
}
}
print(Base.make().value);
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(Derived.make().value);
Base--;
Derived++;
((p, q = 'hello') => p + q)(/x/i);
print(Derived[(true & 10, new Object(0))]);
