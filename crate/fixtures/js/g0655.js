for (const p7 of 'ab') {
var [b, , ...rest] = [/x/i, 2, 3];
}
function wrap() {
;
(function (u) {
return u;
})([...[undefined <= null, Array.from({ length: 0 }, (e, i) => i * 0x10)]]);
if (new.target) {
print('ctor');
}
return (/[0-9]+/g) ?? ([...[3, (function (u) {
return u;
})('0')]]);
}
print(wrap());
class B8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B8('\n');
}
m1(a) {
return a + this.x;
}
}
class C extends B8 {
constructor() {
super('abc');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
C = String.raw`a${{ next0: B8 }}b`;
let a8 = JSON.stringify(((p, q = /x/i) => p + q)(B8));
