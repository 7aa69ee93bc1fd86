var w3 = 1;
while (w3 > 0) {
w3--;
switch (`t5 ${[String.raw`a${w3}b`, , +('')]} end`) {
case /[0-9]+/g:
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue;
}
}
break;
case '\u0041':
case 0:
print(((p, q = /ab+c/) => p + q)(null), [(false ? '\n' : w3) >> { p00: /[0-9]+/g, x1: w3 }, , ((p, q = /ab+c/) => p + q)(w3)]);
default:
eval("1 + 2");
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
for (var p in { a: 1, b: 2 }) {
w3 = w3;
}
class C0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C0(false);
}
m2(a) {
return a + this.x;
}
}
print(C0.make().value);
