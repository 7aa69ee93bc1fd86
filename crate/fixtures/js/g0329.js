outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
for (var j = 0; j < 5; j++) {
(function (u) {
return u;
})(j.y);
var w9 = 0;
do {
w9 += 1;
} while (w9 < 2);
}
print(+([{ p00: /[0-9]+/g }, (2, 1e3)]));
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
function make(acc6) {
for (var p5 of 'ab') {
w7--;
}
var w = 0;
while (w > 0) {
w--;
1;
}
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
m0(a) {
return a + this.x;
}
}
class B extends C {
constructor() {
super(2);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
print(arguments.length);
return +(JSON.stringify([10, /[0-9]+/g]));
}
print(make(null));
if ((String.raw`a${w7}b` ? (w7) ?? ([...[w7, /[0-9]+/g]]) : ((w7) ?? ('0') ? [/[0-9]+/g, , w7] : new Date()))) {
w7 = [make({ next0: w7, x1: null }), new Array(1)];
} else {
try {
{
w7 = w7;
}
throw new RangeError('\u0041');
} catch (e) {
print(e.message);
}
}
w7++;
let n = ((p, q = 3) => p + q)(String.raw`a${Math.round(w7, w7)}b`);
print(Array.from({ length: 4 }, (e, i) => i * 100));
n = new Set();
