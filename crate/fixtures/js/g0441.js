{
print((function (u) {
return u;
})(new Date(3)));
;
}
print(String.raw`a${((NaN, 1) ? +(/x/i) : Math.floor(null, 'hello'))}b`);
for (const k0 of [1, 2, 3]) {
eval("var ev = 3; ev * 2");
}
print([undefined >>> [1, 2, 3].prop, JSON.stringify(String.raw`a${/ab+c/}b`), [...[false, true]] != [1, 2, 3]['a,b,c']]);
var [a1, , ...tail] = ['\n', 2, 3];
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
if (a1) {
for (var i = 0; i < 1; i++) {
print(a1.p1);
eval("var ev = 3; ev * 2");
}
class Box0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box0(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class A extends Box0 {
constructor() {
super(100);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break;
}
}
} else {
var w = 1;
while (w > 0) {
w--;
eval("[1, 2].length");
}
print(Array.from({ length: 1 }, (e, i) => i * 100), Math.round([String(a1), Object.keys([1, 2])], 'hello'));
}
}
