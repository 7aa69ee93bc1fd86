;
;
;
print(JSON.stringify({ p10: [/[0-9]+/g, '\n', /[0-9]+/g] }));
switch (10) {
case 0x10:
eval("[1, 2].length");
break;
case /x/i:
case '\u0041':
eval("[1, 2].length");
default:
print([new Set(), [Array.from({ length: 4 }, (e, i) => i * 100), , Object.keys({})], /[0-9]+/g - JSON.stringify(null)], (function (u) {
return u;
})(new Set()));
}
{
try {
for (var p of []) {
const x6 = [[], { x0: [p], p11: JSON.stringify(/[0-9]+/g), p12: Array.from({ length: 0 }, (e, i) => i * 0.5) }];
}
} catch (err0) {
print(err0.message);
}
}
class Point2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point2(Infinity);
}
m1(a) {
return a + this.x;
}
}
class Derived1 extends Point2 {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived1().value);
var n = function* () {
yield undefined;
yield* [1, 2];
};
