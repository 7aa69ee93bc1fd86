function check(tmp, c) {
try {
eval("1 + 2");
++tmp;
throw new TypeError('');
} catch (err) {
print(err);
}
c--;
tmp = [...[Array.from({ length: 1 }, (e, i) => i * 100), Array.from({ length: 1 }, (e, i) => i * -1)]];
print(arguments.length);
return ((p, q = -1) => p + q)(c);
}
print(check(true, false));
;
;
function wrap() {
let count = [1, 2, 3].x;
try {
check();
count++;
} catch (ex9) {
print(ex9.message);
}
var tmp9 = { y0: JSON.stringify(new Date(10)) };
return [((p, q = 1e3) => p + q)(String(tmp9)), , tmp9.x <= (null) ?? (count)];
}
print(wrap());
var w = 0;
do {
w += 1;
} while (w < 1);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('a,b,c');
}
m0(a) {
return a + this.x;
}
}
class Point extends Base {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
;
