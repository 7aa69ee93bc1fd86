print(String.raw`a${String([undefined, , /[0-9]+/g])}b`, [1, 2, 3][{ next0: Array.from({ length: 3 }, (e, i) => i * 10), prop1: Math.max('\u0041', /ab+c/), value2: String.raw`a${true}b` }]);
eval("print('e')");
;
;
for (let k8 of [1, 2, 3]) {
k8++;
}
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(10);
}
m1(a) {
return a + this.x;
}
}
print(A.make().value);
