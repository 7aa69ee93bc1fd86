switch ((function (u) {
return u;
})(String([...[NaN, '\n']]))) {
case Infinity:
var w = 0;
do {
w += 1;
} while (w < 2);
break;
case 10:
case /[0-9]+/g:
;
default:
print(w[String(w)], w);
}
var y3 = { y3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
;
++y3;
var w10 = 0;
while (w10 > 0) {
w10--;
if ({ y0: w10[(function (u) {
return u;
})(/x/i)], y1: Array.from({ length: 2 }, (e, i) => i * 3), length2: { p10: new Error(), y1: (w10, w10), x2: [1, 2, 3].value } }) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
class Derived extends C {
constructor() {
super(Infinity);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
}
}
w10 *= /ab+c/;
w10 &= w10 > [new Map()];
y3 = [[...[String(y3), undefined]], , /ab+c/];
