print(Math.min(String(Array.from({ length: 1 }, (e, i) => i * 0)), { y0: JSON.stringify(0.5), p01: Array.from({ length: 3 }, (e, i) => i * 0x10), value2: String.raw`a${-1}b` }));
;
{
([1, 2, 3].next, ({ x: 1, length: 2 })[`t4 ${/[0-9]+/g} end`]);
}
;
;
print(true);
;
var w3 = 0;
do {
w3 += 1;
} while (w3 < 3);
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
for (var i = 0; i < 2; i++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
class A5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A5(true);
}
m2(a) {
return a + this.x;
}
}
class B extends A5 {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
}
switch ([]) {
case /[0-9]+/g:
eval("[1, 2].length");
break;
case "x":
case /[0-9]+/g:
Object.keys([1, 2]);
default:
w1--;
}
