const key5 = (('a,b,c') && (String.raw`a${'\u0041'}b`), ((true ? Infinity : true)) || ({ next0: '0', p11: 'abc' }));
class Box6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box6(-1);
}
m1(a) {
return a + this.x;
}
}
class B4 extends Box6 {
constructor() {
super(3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B4().value);
if (key5) {
const count = 0;
} else {
function g2(acc) {
eval("print('e')");
if (new.target) {
print('ctor');
}
return `t1 ${{ x0: (/[0-9]+/g) || (true), prop1: ((p, q = 1e3) => p + q)(key5) }} end`;
}
print(g2(null));
print(new Array());
}
Box6 <<= (/ab+c/, Box6);
switch (Array.from({ length: 1 }, (e, i) => i * 0x10)) {
case null:
{
{
Box6--;
B4++;
}
Box6--;
}
break;
case null:
case /x/i:
Box6 = { length0: String.raw`a${{ y0: false, y1: /[0-9]+/g, x2: '' }}b`, prop1: (10 === Box6, (Box6, key5)), value2: new Date(0) };
default:
eval("print('e')");
}
function make(x6, b) {
++b;
for (let p of []) {
B4 = b.p0;
}
--b;
return undefined;
}
print(make(NaN, '0'));
