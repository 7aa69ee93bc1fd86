;
switch (([1, 2, 3][2 != '\n'], { length0: ("x", undefined), x1: Math.sqrt(1, 255), x2: String("x") })) {
case null:
function helper0(res, val) {
(([/x/i, 0x10]) && (val !== res), res.p1);
print(`t3 ${(255, Array.from({ length: 2 }, (e, i) => i * Infinity))} end`);
Math.round(Math.sqrt(String(val), val), JSON.stringify(`t2 ${/x/i} end`));
print(arguments.length);
return typeof (new WeakMap());
}
print(helper0('\u0041', undefined));
break;
case 1:
case /ab+c/:
const acc = [1, 2, 3].prop;
default:
eval("[1, 2].length");
}
;
function check(item9, tmp) {
++item9;
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(false);
}
m1(a) {
return a + this.x;
}
}
print(A.make().value);
return new Error(10) == ({ x: 1, length: 2 })[(tmp, 0.5)];
}
print(check(100, 3));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
print('\u0041');
