eval("var ev = 3; ev * 2");
var w6 = 0;
do {
w6 += 1;
} while (w6 < 3);
eval("var ev = 3; ev * 2");
class Point3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point3('\n');
}
m0(a) {
return a + this.x;
}
}
print(Point3.make().value);
w6 -= `t4 ${String((Point3, Point3))} end`;
w6--;
let val4 = ([(function (u) {
return u;
})(/ab+c/), , String.raw`a${true}b`] ? ({ x: 1, length: 2 })[("x") && ('hello')] : Array.from({ length: 3 }, (e, i) => i * NaN));
print(((p, q = 0) => p + q)(`t3 ${val4} end`), Array.from({ length: 2 }, (e, i) => i * 2));
function check4(key9, y1) {
Point3--;
--key9;
var obj6 = ({ y0: new WeakMap(), p01: ('\u0041') && ('hello'), prop2: Math.max(Point3, true) } ? [[val4], , [...[val4, y1]]] : /x/i);
return JSON.stringify([(function (u) {
return u;
})(/ab+c/), (/[0-9]+/g) && (/ab+c/)]);
}
check4(NaN, '0');
w6--;
