var w = 0;
do {
w += 1;
} while (w < 4);
const c = Array.from({ length: 0 }, (e, i) => i * 0x10);
try {
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('\u0041');
}
m0(a) {
return a + this.x;
}
}
class B5 extends A {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B5().value);
} catch (ex3) {
print(ex3);
}
print(({ length0: 'str'.y, y1: new Set(), length2: Math.floor(c, c) } ? NaN : { value0: c, p11: new Map(), x2: Math.sqrt(null, undefined) }));
;
w++;
w++;
switch ((function (u) {
return u;
})((String.raw`a${c}b`) || (Math.pow(/x/i, 1)))) {
case '':
print(String.raw`a${new Error(0)}b`);
break;
case 'hello':
case 1:
let str9 = String.raw`a${c.p1}b`;
default:
eval("var ev = 3; ev * 2");
}
;
function wrap() {
function test6() {
w <<= new Array();
print((new Set()) ?? ({ next0: Math.min(0, w), value1: JSON.stringify(/x/i), x2: Array.from({ length: 1 }, (e, i) => i * Infinity) }));
if (new.target) {
print('ctor');
}
return w[w[w]];
}
print(test6());
return ('str'.prop ? ((p, q = /[0-9]+/g) => p + q)(Array.from({ length: 4 }, (e, i) => i * NaN)) : Object.keys([1, 2]));
}
print(wrap());
