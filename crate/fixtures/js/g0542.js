let val1 = ~(Array.from({ length: 2 }, (e, i) => i * 0));
if ((Math.max([/ab+c/, , val1], { prop0: false }) ? ((0x10, val1)) || (String.raw`a${val1}b`) : String(new Date(1)))) {
class A4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A4(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
print(A4.make().value);
;
} else {
eval("1 + 2");
++val1;
}
eval("print('e')");
val1 = JSON.stringify(/[0-9]+/g);
{
++val1;
function check(b9, val0) {
++val1;
;
return 1e3;
}
print(check(/ab+c/, true));
}
val1 = !([val1, , val1]) ^ (function (u) {
return u;
})(((p, q = 3) => p + q)(val1));
;
print([String.raw`a${val1}b`, String(val1)] + [JSON.stringify(1e3), new Object(3), ((p, q = /[0-9]+/g) => p + q)(val1)], Array.from({ length: 0 }, (e, i) => i * Infinity));
