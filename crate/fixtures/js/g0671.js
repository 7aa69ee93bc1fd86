debugger;
;
var res5 = (u, v = 'a,b,c') => u + v;
res5 = Array.from({ length: 3 }, (e, i) => i * 255);
try {
eval("[1, 2].length");
throw new RangeError('0');
} catch (e6) {
print(e6.message);
}
{
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/x/i);
}
m1(a) {
return a + this.x;
}
}
class B extends Base {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
try {
--B;
try {
;
print((String.raw`a${(Base, 255)}b` ? (null, (0x10) ?? (true)) : [new Map(), , `t2 ${'\n'} end`]), B.prop);
throw new Error('abc');
} catch (ex) {
print(ex.message);
} finally {
print(String(typeof (new WeakMap())));
}
} catch (err1) {
print(err1);
}
}
