if (new Set()) {
;
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(null);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
} else {
;
var w0 = 2;
while (w0 > 0) {
w0--;
w0 = String(String(w0));
}
}
[({ p00: 2 }) && (undefined), , ((p, q = 10) => p + q)(('', undefined))];
if (new Map()) {
print({ x0: [1, 2, 3].x, value1: String(String.raw`a${'\n'}b`) });
} else {
print(/[0-9]+/g);
}
for (var k in { a: 1, b: 2 }) {
var y7 = (k.prop) ?? (Math.floor(k, k.value));
}
print([1, 2, 3][(new Object(), [])]);
