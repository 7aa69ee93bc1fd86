eval("[1, 2].length");
print("x");
print(1e3);
const tmp1 = ((p, q = 'a,b,c') => p + q)(({ x: 1, length: 2 })[`t7 ${false} end`]);
var w = 3;
while (w > 0) {
w--;
print(JSON.stringify(Array.from({ length: 2 }, (e, i) => i * 0.5)), tmp1);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
w = w[/[0-9]+/g];
new Error();
for (var k = 0; k < 2; k++) {
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(NaN);
}
m2(a) {
return a + this.x;
}
}
class A extends Box {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
try {
var [x2, , ...rest] = [-1, 2, 3];
throw new RangeError('\u0041');
} catch (err8) {
print(err8);
} finally {
;
}
}
switch (+([[...[tmp1, '']], , [...[/x/i, /ab+c/]]])) {
case 'a,b,c':
for (var p in { a: 1, b: 2 }) {
try {
p -= Array.from({ length: 0 }, (e, i) => i * 0.5);
throw new Error("x");
} catch (ex8) {
print(ex8.message);
}
}
break;
case false:
case '0':
w--;
default:
w *= `t2 ${(Math.max(1e3, 3) ? w : new WeakMap())} end`;
}
