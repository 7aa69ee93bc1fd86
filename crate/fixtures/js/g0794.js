var { length: str = 1, ...rest6 } = { x: 1 };
eval("1 + 2");
var w0 = 1;
while (w0 > 0) {
w0--;
const obj8 = +(new Date(3));
}
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('0');
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
function run(obj6, m) {
m = (new WeakMap(), [...[str, ((p, q = true) => p + q)(obj6)]]);
if (new.target) {
print('ctor');
}
print(arguments.length);
return (`t6 ${new Object()} end`, (Math.sqrt('abc', str) ? Math.floor(w0, 255) : String(0)));
}
print(run(1e3, 2));
for (var k in [1, 2]) {
str = new Map();
}
new Object(3);
