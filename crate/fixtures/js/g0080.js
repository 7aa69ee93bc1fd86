;
for (let i = 0; i < 2; i++) {
class C4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C4('a,b,c');
}
m0(a) {
return a + this.x;
}
}
print(C4.make().value);
print(({ x: 1, length: 2 }).y);
}
const item = ((p, q = 3) => p + q)(Object.keys({ a: 1 }));
eval("1 + 2");
;
print(NaN, [null, , `t2 ${[...['\u0041', item]]} end`]);
