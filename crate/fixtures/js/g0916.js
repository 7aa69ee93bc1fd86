;
var w8 = 0;
do {
w8 += 1;
} while (w8 < 1);
eval("[1, 2].length");
function make5(m4, res) {
m4++;
for (let k9 in { a: 1, b: 2 }) {
;
}
if (new.target) {
print('ctor');
}
return { value0: `t8 ${"x"} end`, prop1: `t2 ${res.value} end` };
}
print(make5(undefined, ''));
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(undefined);
}
m0(a) {
return a + this.x;
}
}
print(Point.make().value);
Point = [{ x0: `t8 ${''} end`, x1: Point[true], p12: { next0: Point, p01: /x/i, value2: '\n' } }];
--Point;
if ((JSON.stringify(Point) ? /x/i : (Object.keys({}) ? (Point ? w8 : Point) : /[0-9]+/g === 'a,b,c'))) {
Point |= JSON.stringify('str'.p1);
try {
print(Object.keys({}), Point[[...[[undefined, /[0-9]+/g, undefined], 'a,b,c']]]);
{
const tmp = [...[typeof (w8 | 0.5), make5()]];
}
throw new RangeError('');
} catch (err3) {
print(err3);
}
--w8;
} else {
print(Object.keys([1, 2]), String.raw`a${new Array(0) | Point}b`);
}
w8--;
