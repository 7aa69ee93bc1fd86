;
class A7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A7('abc');
}
m1(a) {
return a + this.x;
}
}
class A0 extends A7 {
constructor() {
super(undefined);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A0().value);
try {
;
} catch (ex6) {
print(ex6.message);
}
A7--;
A7 = Object.keys({ a: 1 });
print(!((A7 ^ 0 ? JSON.stringify('\u0041') : (A7 ? 2 : A7))), [...[`t4 ${(false, undefined)} end`, ('a,b,c', ["x", 'a,b,c', /ab+c/])]]);
A7 *= [...[`t8 ${'str'.x} end`, `t6 ${A0 <= false} end`]];
