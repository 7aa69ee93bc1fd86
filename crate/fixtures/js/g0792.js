print([1, 2, 3].p0, { p10: Array.from({ length: 0 }, (e, i) => i * 100), y1: '\u0041', p12: [1, 2, 3].p0 });
;
for (let p2 of []) {
p2--;
}
class Base5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base5(10);
}
m0(a) {
return a + this.x;
}
}
print(Base5.make().value);
var w = 0;
do {
w += 1;
} while (w < 3);
w *= JSON.stringify((function (u) {
return u;
})(w != undefined));
w <<= w[Math.floor([...[255, null]], (function (u) {
return u;
})('hello'))];
var [flag9, , ...tail] = [0, 2, 3];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
eval("1 + 2");
