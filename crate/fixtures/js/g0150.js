print(true);
if (new Map()) {
var tmp = new WeakMap();
switch (new Object()) {
case '':
{
++tmp;
}
break;
case /ab+c/:
case 'abc':
tmp *= `t3 ${JSON.stringify(JSON.stringify('\u0041'))} end`;
default:
tmp++;
}
} else {
var w = 1;
while (w > 0) {
w--;
JSON.stringify(new Array(10));
}
w = [...[JSON.stringify(true) > `t2 ${w} end`, (w | w, (10) && (w))]];
}
try {
for (var i = 0; i < 1; i++) {
print(`t6 ${[...[Object.keys({ a: 1 }), /ab+c/ <= undefined]]} end`, new Error());
var w16 = 0;
do {
w16 += 1;
} while (w16 < 1);
}
function g(y4, item) {
item--;
eval("[1, 2].length");
return y4;
}
g(/[0-9]+/g, /[0-9]+/g);
throw new RangeError('abc');
} catch (e) {
print(e.message);
} finally {
switch (new WeakMap()) {
case true:
print(2);
break;
case false:
case true:
;
default:
print(/ab+c/);
}
}
try {
try {
for (let k0 = 0; k0 < 5; k0++) {
print([(function (u) {
return u;
})(String(k0)), (String.raw`a${k0}b` ? `t0 ${undefined} end` : [k0, , k0]), (true) ?? (Math.round(undefined, k0))]);
eval("var ev = 3; ev * 2");
}
} catch (e9) {
print(e9.message);
}
} catch (e0) {
print(e0);
}
function run() {
var w25 = 0;
do {
w25 += 1;
} while (w25 < 4);
try {
w25 += Math.max({ y0: '', p01: (function (u) {
return u;
})(-1) }, ({ x: 1, length: 2 })[~(null)]);
[];
} catch (err8) {
print(err8);
} finally {
print((w25 ? { x0: NaN, value1: Object.keys({}) } : new Date()));
}
var res = String({ p10: Object.keys([1, 2]) });
return new Date(3);
}
print(run());
for (let j = 0; j < 1; j++) {
if ([(new WeakMap() ? String.raw`a${false}b` : ((p, q = 'hello') => p + q)('a,b,c')), , ([...['abc', j]], run(j, j))]) {
print(new Object(10), new Date(0));
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(undefined);
}
m1(a) {
return a + this.x;
}
}
class Point extends Derived {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
} else {
const z7 = j.p1;
z7.p1;
}
--j;
}
['hello', , String(('hello' ? /ab+c/ : "x"))];
eval("[1, 2].length");
let y = [1, 2, 3][({ x: 1, length: 2 })[((p, q = 255) => p + q)(false)]];
