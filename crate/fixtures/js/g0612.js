print(/x/i);
class A6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A6("x");
}
m1(a) {
return a + this.x;
}
}
print(A6.make().value);
A6 -= 'str'[`t2 ${String.raw`a${A6}b`} end`];
var w = 3;
while (w > 0) {
w--;
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
}
[...[[...[[...[A6, NaN]], 255]], [`t2 ${A6} end`, , (function (u) {
return u;
})(/ab+c/)]]];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
print(w, [((p, q = /x/i) => p + q)('0'), , String.raw`a${(w ? w4 : 0)}b`]);
for (const k3 of 'ab') {
function run() {
print(w4[Array.from({ length: 2 }, (e, i) => i * 0)], [...[(({ x: 1, length: 2 }).y ? Math.round(/ab+c/, k3) : (function (u) {
return u;
})(k3)), [...[[w, , /[0-9]+/g], undefined]]]]);
if (new.target) {
print('ctor');
}
print(arguments.length);
return w4;
}
print(run());
}
class C4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C4(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(C4.make().value);
