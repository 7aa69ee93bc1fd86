function h4() {
var obj = u => {
return u;
};
void (void ((function (u) {
return u;
})(obj)));
return ("x") && (obj);
}
print(h4());
var val7 = (function (u) {
return u;
})(Object.keys({ a: 1 }));
class C2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C2('hello');
}
m2(a) {
return a + this.x;
}
}
class Base8 extends C2 {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base8().value);
switch (Object.keys({ a: 1 })) {
case undefined:
++val7;
break;
case 0:
case true:
;
default:
--Base8;
}
Base8 = String(val7);
function test(count) {
function helper(str, z1) {
print((new Date(0) ? new Set() : String(count)));
let z0 = Math.abs(`t6 ${[undefined, , 'abc']} end`, (/x/i, (10 ? z1 : Base8)));
return (h4() ? new WeakMap() : (typeof (val7), (val7) ?? (/x/i)));
}
print(helper(undefined, /[0-9]+/g));
return !(((p, q = 0x10) => p + q)(/ab+c/) == ('0', val7));
}
print(test(1));
print(Infinity | (3 == 10, Base8));
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(undefined);
}
m0(a) {
return a + this.x;
}
}
class B extends Box {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
--B;
--B;
