var a7 = async function () {
return await 1e3;
};
{
a7 += a7.next;
}
function h() {
print(String.raw`a${((function (u) {
return u;
})(a7), Array.from({ length: 2 }, (e, i) => i * 1e3))}b`);
return [(function (u) {
return u;
})(a7), , Math.sqrt(1e3, a7)] & a7.length;
}
print(h());
(a7[Math.round(a7, a7)]) ?? (a7 < 'str'[a7]);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
print(a7[JSON.stringify(`t8 ${a7} end`)]);
for (let k = 0; k < 3; k++) {
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(null);
}
m2(a) {
return a + this.x;
}
}
print(Base.make().value);
switch (k << a7.p1) {
case true:
switch (Object.keys({ a: 1 })) {
case "x":
a7++;
break;
case /[0-9]+/g:
case /[0-9]+/g:
((p, q = undefined) => p + q)(Object.keys({}));
default:
const count = new Map();
}
break;
case /ab+c/:
case "x":
const item = [Base, , Array.from({ length: 2 }, (e, i) => i * 2)];
default:
eval("[1, 2].length");
}
}
class Derived0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived0('\u0041');
}
m0(a) {
return a + this.x;
}
}
class Base5 extends Derived0 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base5().value);
print(h(JSON.stringify(255) <= a7 != true), Derived0);
