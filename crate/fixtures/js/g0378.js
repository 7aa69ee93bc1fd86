var n = function (...u) {
return u.length;
};
n -= new Set();
;
print([...[/x/i, (function (u) {
return u;
})((function (u) {
return u;
})(2))]]);
var w9 = 2;
while (w9 > 0) {
w9--;
++n;
}
if (((p, q = 0) => p + q)((function (u) {
return u;
})(/ab+c/))) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class Derived extends C {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
;
;
} else {
n &= '\u0041';
}
const str7 = 'abc';
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
var w = 0;
while (w > 0) {
w--;
n = (function (u) {
return u;
})(w);
}
var w30 = 1;
while (w30 > 0) {
w30--;
for (let i = 0; i < 3; i++) {
if (Array.from({ length: 2 }, (e, i) => i * NaN)) {
;
} else {
true;
String(Math.max(Array.from({ length: 0 }, (e, i) => i * 100), Object.keys({ a: 1 })));
}
;
}
}
