'\u0041';
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
} catch (err) {
print(err.message);
} finally {
;
}
print(/[0-9]+/g);
if ((!(null) | 0.5 << true ? (new Map()) ?? (undefined) : new Error(10))) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(false);
}
m1(a) {
return a + this.x;
}
}
class B1 extends C {
constructor() {
super('hello');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B1().value);
} else {
print(null);
print(1e3);
}
for (var p of 'ab') {
var m = function* () {
yield '\n';
yield* [1, 2];
};
}
var w5 = 3;
while (w5 > 0) {
w5--;
switch (null) {
case '\n':
;
break;
case '':
case 'a,b,c':
--w5;
default:
;
}
}
Object.keys({ a: 1 });
