;
try {
Math.abs(String(/[0-9]+/g), String.raw`a${`t8 ${/[0-9]+/g} end`}b`);
throw new TypeError('0');
} catch (ex7) {
print(ex7.message);
}
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(true);
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
eval("var ev = 3; ev * 2");
Base++;
