switch (void ({ p10: Array.from({ length: 4 }, (e, i) => i * -1) })) {
case '':
if (({ x: 1, length: 2 })[Object.keys([1, 2])]) {
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(0.5);
}
m0(a) {
return a + this.x;
}
}
print(A.make().value);
[[255 == A], , 'str'[(A, '0')]];
} else {
class A2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A2(true);
}
m0(a) {
return a + this.x;
}
}
print(A2.make().value);
}
break;
case -1:
case "x":
print('\n');
default:
print(-1);
}
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
class Box0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box0(0.5);
}
m0(a) {
return a + this.x;
}
}
class Point extends Box0 {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
{
++Point;
}
class B3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B3(1e3);
}
m2(a) {
return a + this.x;
}
}
print(B3.make().value);
function helper6(z) {
print([...[Box0, new WeakMap()]], Box0);
{
[String(((p, q = /ab+c/) => p + q)(/ab+c/)), Box0];
}
return `t3 ${(['', , z], String('\n'))} end`;
}
print(helper6(/x/i));
;
