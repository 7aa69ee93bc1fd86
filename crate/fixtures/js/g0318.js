for (var i = 0; i < 1; i++) {
;
print(Array.from({ length: 2 }, (e, i) => i * 10), i[i[String('hello')]]);
}
'\n';
print(false);
for (let p of [1, 2, 3]) {
eval("[1, 2].length");
}
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(undefined);
}
m1(a) {
return a + this.x;
}
}
class Point extends C {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
