;
'hello';
print(('str'.y ? ~(/x/i) : 1), typeof (((/ab+c/, 'a,b,c') ? `t0 ${/ab+c/} end` : ({ x: 1, length: 2 }).p1)));
new Object();
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(undefined);
}
m1(a) {
return a + this.x;
}
}
class Derived extends C {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
switch ('a,b,c') {
case null:
Derived *= C;
break;
case '':
case /x/i:
Derived = (function (u) {
return u;
})(Math.sqrt((true) ?? (NaN), C[Derived]));
default:
eval("[1, 2].length");
}
try {
Derived = ~(new Array(10) / C);
--Derived;
} catch (e) {
print(e);
}
eval("var ev = 3; ev * 2");
