var b9 = Math.abs(`t3 ${`t4 ${''} end`} end`, String(2));
switch ([(String(0x10)) || (b9[b9]), b9, Array.from({ length: 4 }, (e, i) => i * 10)]) {
case '\u0041':
if ([[/x/i, , (b9, b9)], ((p, q = '\n') => p + q)([null, , b9])]) {
var obj8 = function* () {
yield /ab+c/;
yield* [1, 2];
};
} else {
switch ((function (u) {
return u;
})('str'[new Error(0)])) {
case NaN:
let res = [...[String.raw`a${/ab+c/}b`, b9]];
break;
case 0.5:
case /x/i:
--res;
default:
b9 = Math.sqrt(res[[/ab+c/]], String(new Object()));
}
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point('a,b,c');
}
m1(a) {
return a + this.x;
}
}
class Derived extends Point {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
}
break;
case 'hello':
case false:
;
default:
let y3 = b9[b9];
}
b9--;
eval("1 + 2");
for (var k6 in [1, 2]) {
;
}
print(!(String.raw`a${b9}b`) + (String.raw`a${'hello'}b`, Array.from({ length: 0 }, (e, i) => i * 0x10)), [...[[JSON.stringify(0), , ((p, q = /[0-9]+/g) => p + q)(/x/i)], (function (u) {
return u;
})(Object.keys({}))]]);
switch ((new WeakMap() ? [(function (u) {
return u;
})(b9), { y0: '\n' }, (function (u) {
return u;
})(b9)] : `t7 ${/x/i} end` !== b9)) {
case /x/i:
print(new Object(10));
break;
case -1:
case 100:
b9 = String((b9[undefined], b9.next));
default:
let m7 = (function (u) {
return u;
})((function (u) {
return u;
})(b9));
}
var item = ([((p, q = true) => p + q)(b9), , (/ab+c/, b9)] ? ((b9) ?? (null) ? Array.from({ length: 1 }, (e, i) => i * 1e3) : String(b9)) : Array.from({ length: 0 }, (e, i) => i * 0));
({ x: 1, length: 2 }).y;
const z = Math.pow((0x10, Array.from({ length: 3 }, (e, i) => i * 3)), [('a,b,c' ? item : b9), , String.raw`a${b9}b`]);
let acc4 = 'abc';
