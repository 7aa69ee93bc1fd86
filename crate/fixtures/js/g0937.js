for (const p3 in { a: 1, b: 2 }) {
print(/x/i);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
var w = 3;
while (w > 0) {
w--;
print((({ p00: w, value1: Box }) ?? (String(undefined)), w));
}
try {
;
} catch (e0) {
print(e0.message);
}
;
;
;
var key = async function () {
return await /x/i;
};
if (new Date()) {
eval("[1, 2].length");
}
Box = (function (u) {
return u;
})(((p, q = '\u0041') => p + q)(new Date()));
