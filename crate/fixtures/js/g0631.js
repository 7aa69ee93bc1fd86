;
function f8(n4, res8) {
switch (String(new Error())) {
case '\u0041':
n4 = (String.raw`a${{ p00: /[0-9]+/g, length1: n4, x2: 'abc' }}b`, res8);
break;
case true:
case /x/i:
;
default:
[[], (new Array(10) ? [/ab+c/, , res8] : new Object(10))];
}
for (var k = 0; k < 1; k++) {
--res8;
res8--;
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 4);
return res8;
}
print(f8(/[0-9]+/g, '0'));
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(false);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
++Base;
`t3 ${JSON.stringify((function (u) {
return u;
})(Base))} end`;
function check() {
print(Object.keys({ a: 1 }), ((p, q = 100) => p + q)((Base ? typeof (Base) : JSON.stringify('a,b,c'))));
Base--;
function check5(a2, a3) {
a2 += (a3.next) || (Math.abs(JSON.stringify(a2), ((p, q = '0') => p + q)('')));
let flag1 = new WeakMap();
return [...[String(((p, q = 'abc') => p + q)(true)), (`t3 ${/x/i} end`) || (Array.from({ length: 0 }, (e, i) => i * 255))]];
}
print(check5(/x/i, 255));
if (new.target) {
print('ctor');
}
return [Object.keys({}), , false];
}
print(check());
if (new Array(1)) {
for (const k3 of [1, 2, 3]) {
function helper() {
;
eval("[1, 2].length");
let y = k3;
return ({ next0: Base, y1: `t5 ${''} end` } ? ((p, q = true) => p + q)([1e3, , true]) : JSON.stringify(('a,b,c') || (k3)));
}
print(helper());
}
}
for (var j3 = 0; j3 < 2; j3++) {
{
print(Object.keys({}), String.raw`a${j3[new Error(10)]}b`);
if (Math.pow(((p, q = undefined) => p + q)((10, -1)), [])) {
eval("[1, 2].length");
} else {
Object.keys({ a: 1 });
(function (u) {
return u;
})([]);
}
}
{
eval("[1, 2].length");
}
}
