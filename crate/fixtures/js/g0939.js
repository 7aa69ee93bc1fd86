{
print(0x10);
}
for (let p in [1, 2]) {
if (Math.abs(p.value, String('0'))) {
try {
p = ((p, q = 0) => p + q)([String.raw`a${'\n'}b`, Array.from({ length: 2 }, (e, i) => i * 0x10)]);
;
throw new RangeError('abc');
} catch (ex) {
print(ex);
} finally {
eval("print('e')");
}
print(Array.from({ length: 1 }, (e, i) => i * 100), ([...[[1, 2, 3]['hello'], p]], (`t2 ${/x/i} end`) || (('\n' ? true : p))));
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('hello');
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
} else {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue;
}
}
class Point2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point2(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
class A extends Point2 {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
}
}
print((new Map(), String.raw`a${new WeakMap()}b`), ({ x: 1, length: 2 }).length);
var res4 = ['0', , /x/i << '0' < (function (u) {
return u;
})('abc')];
try {
function h0(n, m) {
++m;
if (new.target) {
print('ctor');
}
return [...[JSON.stringify(-(n)), String.raw`a${/x/i - true}b`]];
}
print(h0(/ab+c/, 100));
if ([1, 2, 3].next) {
res4 <<= "x";
}
} catch (err) {
print(err.message);
} finally {
res4 = new Set();
}
