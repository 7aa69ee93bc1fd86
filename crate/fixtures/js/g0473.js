outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
class Base6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base6(null);
}
m1(a) {
return a + this.x;
}
}
print(Base6.make().value);
({ x0: Array.from({ length: 3 }, (e, i) => i * 2) });
print(Base6.length);
print((function (u) {
return u;
})([(Base6) || (/ab+c/), , [/[0-9]+/g, 1e3]]));
Base6++;
{
eval("print('e')");
}
