print('str'.prop);
print(null);
print([...[{ next0: -(0), y1: JSON.stringify(10), value2: [null, null] }, Object.keys({})]], { value0: ({ x: 1, length: 2 }).value, p01: /x/i, prop2: `t8 ${(undefined ? NaN : /[0-9]+/g)} end` });
var z = { z, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
z--;
for (let i = 0; i < 3; i++) {
let c9 = i;
--i;
}
try {
--z;
try {
(null, [Array.from({ length: 4 }, (e, i) => i * NaN), , `t3 ${0} end`]);
var { x: a = false, ...rest } = { x: 1 };
throw new TypeError("x");
} catch (e) {
print(e);
}
} catch (ex7) {
print(ex7.message);
}
function check(res2, arr9) {
for (var k3 = 0; k3 < 5; k3++) {
res2 = { prop0: `t3 ${10} end`, next1: [`t1 ${undefined} end`, (/x/i, res2)], length2: ([1, 2, 3]['0'] ? (1 ? '0' : false) : { length0: arr9, y1: z, y2: k3 }) };
z++;
}
class Base0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base0(Infinity);
}
m1(a) {
return a + this.x;
}
}
class Derived7 extends Base0 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived7().value);
switch (/ab+c/) {
case '\n':
print(((p, q = /x/i) => p + q)(new Date()), (`t8 ${'0'} end` ? (function (u) {
return u;
})([Derived7, "x"]) : `t8 ${new Error(10)} end`));
break;
case true:
case /x/i:
const res = [1, 2, 3][(function (u) {
return u;
})([...[z, null]])];
default:
++Base0;
}
return Math.min(String(0), `t4 ${-(res2)} end`);
}
check(/ab+c/, 10);
String.raw`a${z.value}b`;
eval("[1, 2].length");
++z;
