for (let k = 0; k < 1; k++) {
for (const p of [1, 2, 3]) {
print(k);
}
class Box0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box0(null);
}
m0(a) {
return a + this.x;
}
}
class Base extends Box0 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
}
var x1 = JSON.stringify(new Error(0));
for (let j9 = 0; j9 < 5; j9++) {
{
var count8 = { count8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
j9 = /ab+c/;
}
[...[x1, ({ p00: x1, x1: /ab+c/, prop2: j9 }, String.raw`a${/x/i}b`)]];
}
let flag = String.raw`a${Object.keys({})}b` ^ 'abc';
var w4 = 1;
while (w4 > 0) {
w4--;
print(Math.max([w4[w4], , [...['abc', flag]]], w4.prop));
}
