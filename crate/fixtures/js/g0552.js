print(`t6 ${new Error()} end`, 'str'[Math.pow((function (u) {
return u;
})(null), Array.from({ length: 1 }, (e, i) => i * 1))]);
switch ({ next0: JSON.stringify((function (u) {
return u;
})('0')), p01: Array.from({ length: 0 }, (e, i) => i * 0.5), length2: [(-1, true), , String(/x/i)] }) {
case 255:
for (var j5 = 0; j5 < 5; j5++) {
class A7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A7(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
class Point extends A7 {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
const val5 = JSON.stringify((Object.keys([1, 2]) ? (j5, A7) : (function (u) {
return u;
})(/x/i)));
}
break;
case true:
case 3:
JSON.stringify('str'[new Error()]);
default:
debugger;
}
print(!((function (u) {
return u;
})({ y0: /ab+c/, next1: 0.5, y2: /x/i })), { x0: ('str'[/x/i], '' !== undefined) });
{
{
if ((Object.keys({ a: 1 }) ? +([/ab+c/, undefined, false]) : undefined)) {
;
} else {
print('\u0041');
}
}
}
switch ([new Set(), `t0 ${[/x/i, , /x/i]} end`, String([/x/i, , 0])]) {
case "x":
if (((p, q = undefined) => p + q)(((p, q = 1e3) => p + q)(!('')))) {
;
var w = 0;
do {
w += 1;
} while (w < 4);
var key = function* () {
yield 'hello';
yield* [1, 2];
};
}
break;
case undefined:
case null:
print(10);
default:
;
}
class A4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A4(undefined);
}
m1(a) {
return a + this.x;
}
}
class Derived extends A4 {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
Derived++;
for (let k in { a: 1, b: 2 }) {
Derived++;
}
new Date(0);
--A4;
