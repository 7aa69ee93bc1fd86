print({ length0: (function (u) {
return u;
})(new Map()), prop1: (function (u) {
return u;
})(Array.from({ length: 0 }, (e, i) => i * 1)) });
eval("[1, 2].length");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
2;
;
;
if ((Object.keys([1, 2]), (/x/i ^ /x/i) ?? ([Infinity, , 'hello']))) {
switch (Math.max([JSON.stringify(true), , /ab+c/], ([...[/[0-9]+/g, null]] ? ["x", , undefined] : (function (u) {
return u;
})(100)))) {
case 2:
{
print(([((p, q = '\u0041') => p + q)(true)] ? ('hello', NaN) : `t3 ${new Map()} end`));
}
break;
case '0':
case '\u0041':
print(true);
default:
print(Object.keys([1, 2]));
}
;
;
}
var a = [100, , Array.from({ length: 2 }, (e, i) => i * 0x10)];
for (const k of [1, 2, 3]) {
debugger;
}
var w7 = 0;
while (w7 > 0) {
w7--;
class C5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C5(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(C5.make().value);
}
if (((function (u) {
return u;
})(100)) || (String.raw`a${undefined}b`)) {
print(a);
a = `t5 ${Math.max(new Set(), [w7, /[0-9]+/g, w7])} end`;
w7--;
} else {
for (const p in [1, 2]) {
;
}
switch (String({ next0: new Map(), prop1: [/x/i, ''], next2: [...[/x/i, 1]] })) {
case /ab+c/:
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('a,b,c');
}
m2(a) {
return a + this.x;
}
}
class A extends Derived {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
break;
case /x/i:
case null:
Derived = w7[((p, q = 'hello') => p + q)([1, 2, 3][Derived])];
default:
(/ab+c/ ? A.x : ((undefined) && (A)) ?? (new Date()));
}
}
