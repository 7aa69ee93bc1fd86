;
class Point6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point6(null);
}
m0(a) {
return a + this.x;
}
}
print(Point6.make().value);
if (Point6) {
const res = (Point6[Array.from({ length: 3 }, (e, i) => i * 2)]) || ((String.raw`a${/x/i}b`) ?? (Point6.p1));
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
}
++Point6;
