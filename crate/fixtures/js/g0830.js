var w = 0;
do {
w += 1;
} while (w < 1);
for (let j8 = 0; j8 < 1; j8++) {
if ('abc') {
j8++;
try {
j8--;
eval("var ev = 3; ev * 2");
throw new Error("x");
} catch (err7) {
print(err7);
} finally {
print(j8[(j8 ? (Infinity, j8) : Array.from({ length: 2 }, (e, i) => i * 2))]);
}
}
var [key0, , ...tail5] = [/x/i, 2, 3];
}
let val0 = String(3);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(0x10);
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
++w;
