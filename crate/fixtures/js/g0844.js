;
print('\u0041');
print(3);
print([({ x: 1, length: 2 })[false], , (typeof (true) ? { value0: true, value1: '\u0041' } : new Map())]);
switch (new Map() == [1, 2, 3].p1) {
case true:
[-(true), (-1, (undefined, /x/i))];
break;
case null:
case false:
const data5 = [1, 2, 3][['hello' * 0, , ((p, q = '') => p + q)(0.5)]];
default:
print(`t7 ${data5} end`);
}
print(/[0-9]+/g);
print(/x/i);
;
print('\u0041');
var a3 = { a3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\n']: 1, ...{ q: 2 } };
