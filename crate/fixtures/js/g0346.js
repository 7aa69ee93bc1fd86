{
let acc6 = [1, 2, 3].prop;
acc6 = String.raw`a${String.raw`a${(function (u) {
return u;
})(acc6)}b`}b`;
}
eval("1 + 2");
for (var p of 'ab') {
String(`t5 ${{ x0: 'abc', prop1: /x/i, prop2: NaN }} end`);
}
var w1 = 0;
do {
w1 += 1;
} while (w1 < 3);
print(w1.x);
--w1;
class Box6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box6(false);
}
m0(a) {
return a + this.x;
}
}
print(Box6.make().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
