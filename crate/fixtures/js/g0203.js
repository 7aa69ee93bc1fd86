{
if (Array.from({ length: 4 }, (e, i) => i * 1e3)) {
function f() {
String.raw`a${new Error()}b`;
;
;
if (new.target) {
print('ctor');
}
print(arguments.length);
return ({ y0: true, next1: (/ab+c/) || (undefined), y2: new Map() }) && (((true) && (1e3)) ?? ({ prop0: 0, next1: /ab+c/, x2: undefined }));
}
print(f());
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
}
var c = [1, 2, 3][{ x0: true * Infinity }];
}
(function (u) {
return u;
})(((/ab+c/) && (100), String.raw`a${3}b`));
print(false);
{
print(/[0-9]+/g);
;
}
{
print(0x10);
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('');
}
m2(a) {
return a + this.x;
}
}
class B9 extends A {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B9().value);
}
if (+(Math.min(undefined, Math.sqrt(true, 1e3)))) {
print({ prop0: `t3 ${(function (u) {
return u;
})(false)} end`, p01: new Error(3) });
try {
for (var k = 0; k < 3; k++) {
print(String(((p, q = /x/i) => p + q)([...[/ab+c/, true]])), /ab+c/);
print('');
}
throw new RangeError('abc');
} catch (ex0) {
print(ex0);
} finally {
print(((p, q = /ab+c/) => p + q)((function (u) {
return u;
})([...[undefined, 'abc']])), new Error(10));
}
} else {
var w7 = 0;
do {
w7 += 1;
} while (w7 < 2);
print(JSON.stringify(String.raw`a${[1e3, , '0']}b`));
}
switch (0x10) {
case undefined:
switch ((null << String.raw`a${255}b`, ((p, q = 10) => p + q)('str'['abc']))) {
case '':
for (let j1 = 0; j1 < 3; j1++) {
print(j1);
print(((j1) || (100) + [...[0.5, j1]] ? [j1, , [j1]] : ((p, q = '') => p + q)(Math.pow(j1, j1))), (Array.from({ length: 4 }, (e, i) => i * 2) ? [...['hello', 'str'.next]] : { x0: void (true) }));
}
break;
case /x/i:
case /ab+c/:
;
default:
print(/[0-9]+/g);
}
break;
case /ab+c/:
case '\u0041':
let arr9 = +(Array.from({ length: 1 }, (e, i) => i * 3));
default:
--arr9;
}
switch ({ value0: String((/[0-9]+/g) && (3)), p11: Object.keys({}), length2: 1 }) {
case /ab+c/:
for (let i = 0; i < 4; i++) {
--i;
i = NaN;
}
break;
case /x/i:
case Infinity:
var n = ((p, q = 255) => p + q)(/x/i);
default:
/x/i;
}
class Derived4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived4(0);
}
m1(a) {
return a + this.x;
}
}
class C8 extends Derived4 {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C8().value);
