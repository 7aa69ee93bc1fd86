switch (String.raw`a${[1, 2, 3].value === Math.sqrt(/x/i, '0')}b`) {
case -1:
try {
var n9 = new Array(1);
for (var i3 = 0; i3 < 1; i3++) {
++i3;
const val1 = String.raw`a${([...[/x/i, i3]] ? n9 + i3 : Math.sqrt(undefined, n9))}b`;
}
throw new Error('abc');
} catch (err8) {
print(err8.message);
}
break;
case 100:
case undefined:
print(Math.abs(Array.from({ length: 4 }, (e, i) => i * Infinity), 1e3));
default:
;
}
;
if (({ x: 1, length: 2 }).p1) {
;
;
} else {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
}
try {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/x/i);
}
m1(a) {
return a + this.x;
}
}
class B extends C {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
} catch (e) {
print(e.message);
} finally {
print(Array.from({ length: 3 }, (e, i) => i * -1) == Array.from({ length: 4 }, (e, i) => i * NaN));
}
for (const p of []) {
var b7 = p[p[{ y0: /ab+c/, prop1: /x/i, p12: p }]];
}
switch ({ p10: String(({ x: 1, length: 2 }).p1), p01: ('', ["x", , 1e3]) }) {
case "x":
var w = 0;
do {
w += 1;
} while (w < 1);
break;
case 'hello':
case /[0-9]+/g:
w--;
default:
const b1 = Array.from({ length: 0 }, (e, i) => i * 1e3);
}
