Object.keys({}) >>> (Math.max(true, /ab+c/) ? [false, , /[0-9]+/g] : JSON.stringify(Infinity));
for (let k2 = 0; k2 < 3; k2++) {
k2;
var w2 = 2;
while (w2 > 0) {
w2--;
{
const count = JSON.stringify(((p, q = 'abc') => p + q)(Array.from({ length: 3 }, (e, i) => i * 10)));
k2--;
}
}
}
print(-1);
for (let j = 0; j < 2; j++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
if (j) {
eval("var ev = 3; ev * 2");
} else {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break;
}
}
}
}
print(NaN);
var w = 0;
do {
w += 1;
} while (w < 1);
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(true);
}
m0(a) {
return a + this.x;
}
}
print(A.make().value);
A = ((function (u) {
return u;
})(w['abc'])) ?? (w[`t5 ${false} end`]);
var str = /[0-9]+/g;
print(Math.max((function (u) {
return u;
})(Math.min('a,b,c', 255)), `t4 ${void (100)} end`));
