print(+({ length0: /ab+c/, p01: { prop0: /[0-9]+/g, length1: /x/i, next2: /ab+c/ }, y2: (/ab+c/, 'hello') }));
for (let k8 = 0; k8 < 1; k8++) {
;
((({ x: 1, length: 2 })[k8], new Date(1)) ? new Object(10) : [...[1e3, k8 - k8]]);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
print((function (u) {
return u;
})((new Set()) || (('hello') && (undefined))), String(('str'.value ? void ('hello') : Object.keys({ a: 1 }))));
({ p00: `t4 ${[...[-1, 1e3]]} end`, y1: (function (u) {
return u;
})(/x/i) });
for (let k6 in { a: 1, b: 2 }) {
class Base9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base9('a,b,c');
}
m0(a) {
return a + this.x;
}
}
print(Base9.make().value);
}
var w = 2;
while (w > 0) {
w--;
class Box1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box1('\n');
}
m1(a) {
return a + this.x;
}
}
print(Box1.make().value);
}
for (let i = 0; i < 2; i++) {
print(String(Array.from({ length: 2 }, (e, i) => i * 0.5)));
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
}
