if ((({ x: 1, length: 2 }).x, 'a,b,c')) {
;
[...[Object.keys({}), null]];
var flag2 = function (...u) {
return u.length;
};
}
function check6(acc7) {
acc7--;
return /[0-9]+/g;
}
print(check6(/x/i));
;
;
switch ([1, 2, 3].length) {
case true:
;
break;
case undefined:
case 'a,b,c':
print(Infinity);
default:
JSON.stringify((String(2)) && ((100) || ("x")));
}
print(new WeakMap());
print(Math.max(new Object(1), ((p, q = true) => p + q)(((p, q = 1e3) => p + q)(2))), /x/i);
function check3() {
print({ p00: { y0: false, p01: 0x10, prop2: /x/i }, x1: check6() } >>> ({ x: 1, length: 2 }).value);
function check() {
eval("1 + 2");
;
print(arguments.length);
return new Object();
}
print(check());
return Array.from({ length: 0 }, (e, i) => i * 0);
}
print(check3());
;
for (var k5 in { a: 1, b: 2 }) {
k5 = [(null % k5 ? Array.from({ length: 3 }, (e, i) => i * 255) : new Object()), , (check3() ? k5 : (k5 ? k5 : NaN))];
}
