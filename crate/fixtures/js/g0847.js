{
if (new Set()) {
var { p1: str4 = false, ...tail6 } = { x: 1 };
}
try {
print('0');
} catch (ex8) {
print(ex8.message);
} finally {
;
}
}
function helper() {
print(/[0-9]+/g);
if (new.target) {
print('ctor');
}
print(arguments.length);
return { length0: [typeof (true), , Object.keys({})], y1: Math.min({ p00: /x/i, value1: '0', p12: Infinity }, JSON.stringify('0')) };
}
print(helper());
if ('\u0041') {
print(true);
;
}
function make8(y9) {
y9 = y9[''];
let arr = [];
if (new.target) {
print('ctor');
}
return arr;
}
print(make8('0'));
switch (/ab+c/ & ((p, q = 0) => p + q)(String.raw`a${'\n'}b`)) {
case null:
print(Infinity, [1, 2, 3].p0);
break;
case 3:
case 3:
print((function (u) {
return u;
})(/[0-9]+/g));
default:
const x = ({ x: 1, length: 2 })[/x/i];
}
try {
print(Math.floor([/[0-9]+/g, , '\u0041'] | Object.keys({ a: 1 }), Array.from({ length: 4 }, (e, i) => i * 1e3)), ({ x: 1, length: 2 })[[...[undefined, ['']]]]);
class B6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B6("x");
}
m0(a) {
return a + this.x;
}
}
class Point extends B6 {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
} catch (err5) {
print(err5);
}
for (let k = 0; k < 1; k++) {
eval("print('e')");
;
}
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
