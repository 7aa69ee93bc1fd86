function wrap8(arr4, c9) {
arr4++;
if (new.target) {
print('ctor');
}
print(arguments.length);
return (0x10) ?? ((String(/x/i) ? c9 : c9));
}
wrap8('a,b,c', /ab+c/);
print(/[0-9]+/g, new Map());
[];
class Point2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point2('\n');
}
m0(a) {
return a + this.x;
}
}
print(Point2.make().value);
switch (wrap8([...[new WeakMap(), new Date(1)]], JSON.stringify((function (u) {
return u;
})(Point2)))) {
case /[0-9]+/g:
print(Point2);
break;
case /x/i:
case "x":
Point2 = ((p, q = '\u0041') => p + q)({ y0: [...[Point2, Point2]], length1: 'str'.p0, p02: ~(/ab+c/) });
default:
;
}
Point2--;
switch ((function (u) {
return u;
})((`t5 ${Point2} end` ? ((p, q = 'hello') => p + q)(true) : ~('0')))) {
case 255:
function h7(c7) {
;
c7 = c7;
;
return ((p, q = Infinity) => p + q)(c7.length);
}
print(h7(false));
break;
case false:
case Infinity:
var acc1 = ({ x: 1, length: 2 }).x;
default:
++acc1;
}
++Point2;
--Point2;
eval("print('e')");
