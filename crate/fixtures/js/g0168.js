print(0.5);
for (var k2 = 0; k2 < 3; k2++) {
;
{
print(k2.p0, (function (u) {
return u;
})(!((undefined, k2))));
eval("[1, 2].length");
}
}
for (const p1 in [1, 2]) {
for (let p of []) {
let arr = { x0: Object.keys([1, 2]) };
}
}
if ((new WeakMap(), String([100, , true]))) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
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
return new Box('\n');
}
m2(a) {
return a + this.x;
}
}
print(Box.make().value);
