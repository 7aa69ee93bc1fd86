print(undefined);
((p, q = 'abc') => p + q)(Array.from({ length: 0 }, (e, i) => i * 0x10));
print(/ab+c/);
;
var w1 = 0;
while (w1 > 0) {
w1--;
for (let k = 0; k < 3; k++) {
var w9 = 0;
do {
w9 += 1;
} while (w9 < 1);
var w = 0;
do {
w += 1;
} while (w < 2);
}
}
switch (String.raw`a${'str'[`t8 ${w1} end`]}b`) {
case false:
class Point3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point3(3);
}
m1(a) {
return a + this.x;
}
}
class Derived extends Point3 {
constructor() {
super(3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
break;
case 255:
case null:
print(([...[~(255), Derived.length]]) ?? ({ length0: Point3.value, x1: { x0: w1, x1: w1, p12: /ab+c/ } }));
default:
++Point3;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
debugger;
