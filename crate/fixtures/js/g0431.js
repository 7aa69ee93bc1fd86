eval("[1, 2].length");
print([...['abc', undefined]], (function (u) {
return u;
})(((p, q = NaN) => p + q)(Object.keys({}))));
switch ([1, 2, 3].prop) {
case null:
print(/x/i);
break;
case null:
case /ab+c/:
print(null);
default:
'str'[({ x: 1, length: 2 }).p0];
}
class Derived8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived8('hello');
}
m0(a) {
return a + this.x;
}
}
class Derived extends Derived8 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
[...[{ p00: Math.max('hello', Derived), prop1: 'str'[true], y2: `t6 ${/x/i} end` }, String(Derived8) <= (Derived8 ? Derived8 : null)]];
;
var w6 = 0;
do {
w6 += 1;
} while (w6 < 1);
