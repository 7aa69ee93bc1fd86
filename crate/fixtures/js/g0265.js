;
class Point1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point1(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(Point1.make().value);
Point1--;
function helper8() {
var w = 1;
while (w > 0) {
w--;
print(Math.min(!(((p, q = '\n') => p + q)(w)), Math.floor(/[0-9]+/g, [])));
}
if (new.target) {
print('ctor');
}
return w['\u0041'];
}
helper8();
print(Object.keys({ a: 1 }));
let z = Point1;
for (let k7 in [1, 2]) {
var n = new Error();
}
var w5 = 3;
while (w5 > 0) {
w5--;
{
print(Math.max(0.5, `t5 ${[]} end`), true);
eval("1 + 2");
}
}
