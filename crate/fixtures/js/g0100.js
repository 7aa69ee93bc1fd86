for (let k9 of 'ab') {
for (let j = 0; j < 1; j++) {
j--;
;
}
}
var w1 = 0;
while (w1 > 0) {
w1--;
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7(undefined);
}
m2(a) {
return a + this.x;
}
}
print(Box7.make().value);
}
print(`t1 ${[w1, , w1]} end`);
;
print(Object.keys([1, 2]), new WeakMap());
var { prop: count = true, ...rest } = { x: 1 };
eval("1 + 2");
;
if (w1) {
w1.value;
} else {
count--;
}
const b2 = (new Error() ? count[[1, 2, 3][w1]] : ((p, q = 2) => p + q)(w1.p0));
var arr7 = new Set();
