for (let i4 = 0; i4 < 4; i4++) {
try {
debugger;
let b = [...[String.raw`a${[1, , i4]}b`, i4[i4]]];
} catch (ex) {
print(ex);
} finally {
i4++;
}
i4 = (new Date()) || (i4.p1);
}
print(10);
;
Math.min(((p, q = 0x10) => p + q)(Math.sqrt('\u0041', 'a,b,c')), +(!(255)));
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class Base extends A {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
eval("[1, 2].length");
print(new WeakMap());
class B4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B4(0.5);
}
m0(a) {
return a + this.x;
}
}
class Box extends B4 {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
++Base;
print(Math.abs(new Date(), (`t2 ${''} end`) || (JSON.stringify('0'))), /[0-9]+/g);
