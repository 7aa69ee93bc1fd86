if (new Error()) {
function g(data1, x) {
data1 = JSON.stringify(new Error());
++data1;
return `t5 ${new Date()} end`;
}
g('', /[0-9]+/g);
var w = 0;
do {
w += 1;
} while (w < 1);
debugger;
}
var x5 = async function () {
return await 2;
};
for (let k8 = 0; k8 < 1; k8++) {
eval("[1, 2].length");
eval("print('e')");
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(0.5);
}
m1(a) {
return a + this.x;
}
}
class A9 extends Box {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A9().value);
var obj4 = new Set();
print({ length0: (obj4 ? `t1 ${1} end` : A9), p11: !(`t2 ${obj4} end`) });
{
if (`t1 ${[...[new WeakMap(), Box]]} end`) {
var [res, , ...rest15] = ['', 2, 3];
var obj1 = (u, v = 255) => u + v;
} else {
String(((A9, /x/i) ? false - A9 : { length0: Box, x1: Box, p12: obj4 }));
}
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(10);
}
m2(a) {
return a + this.x;
}
}
print(C.make().value);
}
for (var j = 0; j < 3; j++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
x5++;
}
if ((String.raw`a${[A9, , '\n']}b`, (Math.floor('', '\n'), Object.keys({ a: 1 })))) {
for (var k0 = 0; k0 < 5; k0++) {
try {
obj4--;
eval("var ev = 3; ev * 2");
} catch (e) {
print(e);
}
print(((p, q = /x/i) => p + q)(Array.from({ length: 3 }, (e, i) => i * 0)), `t6 ${/ab+c/} end`);
}
x5++;
;
} else {
if (Array.from({ length: 4 }, (e, i) => i * 255)) {
obj4 = { p00: Math.max(JSON.stringify(x5), JSON.stringify(true)) };
} else {
try {
eval("1 + 2");
} catch (e6) {
print(e6.message);
} finally {
eval("1 + 2");
}
}
for (var i5 = 0; i5 < 3; i5++) {
i5 |= [1, 2, 3][[obj4[Box], , -1]];
for (let p of 'ab') {
;
}
}
}
