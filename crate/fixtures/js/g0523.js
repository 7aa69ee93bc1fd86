;
;
print(-1);
JSON.stringify({ length0: (0 ? 'hello' : false), y1: Array.from({ length: 3 }, (e, i) => i * 2) });
var tmp7 = new Object();
if (new Array()) {
{
class C0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C0(0);
}
m2(a) {
return a + this.x;
}
}
class B1 extends C0 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B1().value);
switch (Math.max(((p, q = 0.5) => p + q)((C0) || (B1)), new WeakMap())) {
case "x":
new Error(10);
break;
case null:
case 2:
eval("[1, 2].length");
default:
++tmp7;
}
}
for (var k6 in [1, 2]) {
[Math.sqrt(tmp7, new Array(1)), , { prop0: ('0' ? '\u0041' : undefined), length1: Object.keys([1, 2]), p02: tmp7[tmp7] }];
}
var w = 3;
while (w > 0) {
w--;
w = (function (u) {
return u;
})(((p, q = '0') => p + q)(Array.from({ length: 4 }, (e, i) => i * 10)));
}
} else {
tmp7 |= String(Math.floor(tmp7.x, Array.from({ length: 0 }, (e, i) => i * Infinity)));
}
tmp7--;
