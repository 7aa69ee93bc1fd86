eval("[1, 2].length");
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
{
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(100);
}
m1(a) {
return a + this.x;
}
}
class C extends B {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
}
debugger;
--Base;
;
Object.keys([1, 2]);
switch (new Array(10)) {
case 'a,b,c':
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
break;
case 'a,b,c':
case '0':
print(false);
default:
print(void (Base));
}
;
switch (Object.keys({ a: 1 })) {
case false:
Base *= [({ x: 1, length: 2 })[Base.p0], Base];
break;
case null:
case -1:
eval("1 + 2");
default:
print(/ab+c/);
}
