var w1 = 3;
while (w1 > 0) {
w1--;
++w1;
}
function check8() {
--w1;
++w1;
if (new.target) {
print('ctor');
}
return [(function (u) {
return u;
})([w1, , w1])];
}
print(check8());
{
print(w1);
var w6 = 3;
while (w6 > 0) {
w6--;
let obj = [...[w1, Array.from({ length: 4 }, (e, i) => i * 2)]];
}
}
function compute(m, x) {
m++;
print(false, ((p, q = /ab+c/) => p + q)(new Array(0)));
let data = (Math.abs(w1, x) ? m : Array.from({ length: 4 }, (e, i) => i * 255));
if (new.target) {
print('ctor');
}
return String({ p00: [w1, , m], p01: data, value2: true > '' });
}
print(compute(undefined, 1e3));
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box('0');
}
m2(a) {
return a + this.x;
}
}
print(Box.make().value);
for (let j8 = 0; j8 < 3; j8++) {
for (var i = 0; i < 3; i++) {
const val9 = [new Date(), , String(j8)] == ((p, q = null) => p + q)(i[w1]);
class Point7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point7(false);
}
m0(a) {
return a + this.x;
}
}
print(Point7.make().value);
}
print({ y0: /ab+c/, prop1: ({ x: 1, length: 2 })[['\n', , false]], x2: JSON.stringify('hello') }, [1, 2, 3][[...['', String.raw`a${j8}b`]]]);
}
for (let p of 'ab') {
check8();
}
var w = 0;
do {
w += 1;
} while (w < 2);
var z = (Math.abs(w.next, '\u0041') ? (function (u) {
return u;
})((false ? /ab+c/ : /x/i)) : compute(null, `t6 ${3} end`));
Box <<= [String.raw`a${void (/ab+c/)}b`, , ((p, q = 10) => p + q)((function (u) {
return u;
})(/ab+c/))];
