switch (/[0-9]+/g) {
case '':
var w6 = 1;
while (w6 > 0) {
w6--;
var w = 0;
while (w > 0) {
w--;
--w;
}
}
break;
case false:
case NaN:
const count = new WeakMap();
default:
const b5 = Object.keys({ a: 1 });
}
{
print(0);
function make0(obj, c8) {
obj++;
c8 = (10) && ((`t3 ${c8} end`) ?? (JSON.stringify(true)));
let b2 = '0';
if (new.target) {
print('ctor');
}
return b2;
}
make0('', '\u0041');
}
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(false);
}
m1(a) {
return a + this.x;
}
}
print(Point.make().value);
Point--;
--Point;
var w13 = 0;
do {
w13 += 1;
} while (w13 < 1);
{
debugger;
}
w13++;
print([...[Infinity, 'a,b,c']]);
eval("var ev = 3; ev * 2");
