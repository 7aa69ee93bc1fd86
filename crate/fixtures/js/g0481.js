;
print(new WeakMap(), (Math.round(new Set(), ((p, q = true) => p + q)(null)), Object.keys([1, 2])));
print(/ab+c/);
var arr6 = [...[(function (u) {
return u;
})(({ x: 1, length: 2 }).length), String({ prop0: 100 })]];
arr6 <<= arr6.prop;
var w = 3;
while (w > 0) {
w--;
var w2 = 2;
while (w2 > 0) {
w2--;
print({ prop0: String.raw`a${new Array(10)}b`, p11: String.raw`a${{ length0: -1 }}b`, value2: String(Math.abs(w, w)) }, ([("x" ? arr6 : arr6)], /x/i));
}
}
String((null) || (Object.keys([1, 2])));
if (String.raw`a${Array.from({ length: 3 }, (e, i) => i * 1e3)}b`) {
function helper7(count9, flag) {
print(1e3 & w.p0, (String.raw`a${0.5}b`) || ([]));
print(arguments.length);
return ((p, q = 2) => p + q)(Math.pow(w, (function (u) {
return u;
})(1e3)));
}
print(helper7('\n', 3));
class Box8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box8(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class A6 extends Box8 {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A6().value);
print(arr6, w[(new Object(), Array.from({ length: 4 }, (e, i) => i * 1))]);
} else {
print(w[(function (u) {
return u;
})(w)]);
eval("[1, 2].length");
}
arr6 = w[String.raw`a${true}b`];
eval("print('e')");
for (var p1 of [1, 2, 3]) {
for (const k3 of 'ab') {
;
}
}
