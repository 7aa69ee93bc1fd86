var item = { item, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
item++;
function g() {
var w = 0;
do {
w += 1;
} while (w < 1);
function make0() {
w -= Object.keys({});
item++;
if (new.target) {
print('ctor');
}
print(arguments.length);
return /[0-9]+/g >> [null, , item] >> { p00: Infinity };
}
make0();
;
return !(new Map());
}
print(g());
--item;
item--;
print(g(([255, , item]) || ({ value0: /x/i })), [...[[{ x0: 'abc', prop1: item }, , void (item)], [...[item, ((p, q = true) => p + q)(item)]]]]);
switch ([String((/[0-9]+/g) && ('hello')), , item]) {
case 3:
if ((function (u) {
return u;
})(Object.keys([1, 2]))) {
if (((p, q = false) => p + q)(g())) {
let count = { p10: String(item), prop1: Object.keys([1, 2]), x2: [(100, item)] };
--item;
} else {
print(([] % item, Object.keys({ a: 1 })));
print(item - g(Math.pow(item, item), (item) && (item)), g((item.value, String(item)), (Object.keys({ a: 1 })) || (new Array(10))));
}
}
break;
case 1:
case NaN:
item[String(new Array(10))];
default:
++item;
}
