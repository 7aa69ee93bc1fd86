class C0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C0('hello');
}
m0(a) {
return a + this.x;
}
}
class A extends C0 {
constructor() {
super('');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
new WeakMap();
print(typeof (Array.from({ length: 4 }, (e, i) => i * NaN)));
print(([new Map(), , typeof (C0)]) && (JSON.stringify(({ x: 1, length: 2 }).p0)));
for (let k of [1, 2, 3]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
}
let n7 = { p00: `t2 ${[...[A, /[0-9]+/g]]} end`, length1: ([/x/i], A) };
print(n7[((function (u) {
return u;
})(/[0-9]+/g)) || (String(/x/i))]);
n7--;
