for (var k4 of []) {
for (let i3 = 0; i3 < 1; i3++) {
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(NaN);
}
m2(a) {
return a + this.x;
}
}
class Box3 extends Box {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box3().value);
print((((p, q = /x/i) => p + q)(((p, q = /ab+c/) => p + q)(/[0-9]+/g)), Math.max(Box.p1, new WeakMap())), JSON.stringify(new Set()));
}
}
var w = 0;
do {
w += 1;
} while (w < 4);
--w;
print([...[Object.keys([1, 2]), Array.from({ length: 3 }, (e, i) => i * Infinity)]]);
