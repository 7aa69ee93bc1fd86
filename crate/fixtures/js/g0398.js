for (var k = 0; k < 4; k++) {
eval("[1, 2].length");
(void (('abc') ?? ("x")), k);
}
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(true);
}
m1(a) {
return a + this.x;
}
}
class C4 extends C9 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C4().value);
C9 &= C4[{ length0: -1, p01: C4 } * C4];
for (let k2 = 0; k2 < 1; k2++) {
if (Math.abs([(k2, /ab+c/), , (1, undefined)], String((function (u) {
return u;
})('\u0041')))) {
var item7 = (u, v = true) => u + v;
} else {
C9 <<= 'str'[String.raw`a${Object.keys({ a: 1 })}b`];
try {
`t2 ${Math.floor(!(C4), (k2) || (C4))} end`;
;
} catch (ex) {
print(ex);
}
}
[Array.from({ length: 1 }, (e, i) => i * NaN), k2[[...[k2, k2]]], 0];
}
C9;
for (var j1 = 0; j1 < 4; j1++) {
{
print(Math.abs(({ x: 1, length: 2 }).p0, new Date(10)));
}
switch ([...[Array.from({ length: 4 }, (e, i) => i * 1e3), JSON.stringify(`t0 ${''} end`)]]) {
case /[0-9]+/g:
C9 &= false;
break;
case false:
case 0.5:
j1 &= new Error();
default:
print(new Object(10));
}
}
var [c, , ...tail15] = ['a,b,c', 2, 3];
