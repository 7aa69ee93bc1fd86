Object.keys({});
var w9 = 0;
while (w9 > 0) {
w9--;
switch ([1, 2, 3].prop) {
case '\n':
++w9;
break;
case 2:
case 'a,b,c':
print(w9, null);
default:
print(1e3);
}
}
w9 = { p00: JSON.stringify(w9[w9]) };
{
w9 = w9[0.5];
}
const z1 = String.raw`a${{ p00: 'str'[false] }}b`;
eval("1 + 2");
if ((Math.round(z1.p0, JSON.stringify('0')) ? z1 : { prop0: w9.y, next1: w9, prop2: w9.p0 })) {
var w = 1;
while (w > 0) {
w--;
{
w = [(function (u) {
return u;
})({ prop0: "x", p01: z1, p02: z1 }), , 3];
;
}
}
try {
w9 <<= new Set() | ((p, q = /x/i) => p + q)([...[w, w9]]);
for (const p6 in { a: 1, b: 2 }) {
new Set();
}
} catch (err8) {
print(err8);
} finally {
try {
print(new Object(3), ({ x: 1, length: 2 }).x);
} catch (ex) {
print(ex);
} finally {
w9 = (w9) && ([Math.sqrt(w, 1e3), , JSON.stringify(2)]);
}
}
for (var k2 = 0; k2 < 5; k2++) {
var w8 = 3;
while (w8 > 0) {
w8--;
k2 = void ([k2, , JSON.stringify(z1)]);
}
w = ({ x: 1, length: 2 }).p1;
}
} else {
eval("1 + 2");
}
if (w9.y) {
w9++;
} else {
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point('\n');
}
m0(a) {
return a + this.x;
}
}
print(Point.make().value);
{
{
null;
eval("1 + 2");
}
Point = [...[(function (u) {
return u;
})(/[0-9]+/g), Point.x]];
}
}
function test() {
print(z1[w9]);
return true;
}
print(test());
