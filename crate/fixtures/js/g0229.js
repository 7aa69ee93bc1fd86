for (var i = 0; i < 2; i++) {
((p, q = 2) => p + q)(Object.keys([1, 2]));
eval("1 + 2");
}
;
{
for (var k of [1, 2, 3]) {
function wrap(str0) {
let key = '';
print(JSON.stringify(Math.sqrt(Math.max(key, k), [/ab+c/])), ~([String.raw`a${key}b`]));
return (`t6 ${k} end` != JSON.stringify(key), Array.from({ length: 3 }, (e, i) => i * NaN));
}
print(wrap(1));
}
print([] & /ab+c/, ({ x: 1, length: 2 }).y);
}
Math.min(Math.floor(['a,b,c', 1e3], String(undefined)), `t2 ${typeof (false)} end`);
if (+([...[String(null), NaN]])) {
if (String(/ab+c/)) {
print('abc');
~({ prop0: typeof ('\u0041') });
{
print((({ x: 1, length: 2 })[true + ''] ? (/x/i) ?? (['0', NaN]) : (('\u0041') ?? (1) ? new Array() : (/x/i, "x"))));
print([], (function (u) {
return u;
})(NaN));
}
} else {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/x/i);
}
m2(a) {
return a + this.x;
}
}
class Base extends C {
constructor() {
super(255);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
(String(Object.keys([1, 2]))) || (Math.min(C, new WeakMap()));
}
} else {
for (let p in [1, 2]) {
p--;
}
}
var w = 0;
do {
w += 1;
} while (w < 4);
