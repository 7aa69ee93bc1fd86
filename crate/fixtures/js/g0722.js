if (JSON.stringify(JSON.stringify('hello'))) {
var w = 0;
do {
w += 1;
} while (w < 4);
var a4 = async function () {
return await true;
};
}
const val = Object.keys([1, 2]);
var w0 = 0;
while (w0 > 0) {
w0--;
;
}
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(true);
}
m0(a) {
return a + this.x;
}
}
class Box7 extends B {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box7().value);
--B;
if (val) {
var { y: m2 = /[0-9]+/g, ...rest9 } = { x: 1 };
for (var k5 = 0; k5 < 4; k5++) {
m2--;
for (let i1 = 0; i1 < 2; i1++) {
w0 *= [[...[{ length0: /ab+c/ }, k5]]];
'a,b,c';
}
}
} else {
Box7--;
class B5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B5('0');
}
m2(a) {
return a + this.x;
}
}
print(B5.make().value);
}
var w19 = 0;
do {
w19 += 1;
} while (w19 < 4);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
