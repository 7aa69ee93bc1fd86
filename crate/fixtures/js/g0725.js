for (var k in [1, 2]) {
class Base4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base4(3);
}
m0(a) {
return a + this.x;
}
}
print(Base4.make().value);
}
var w8 = 2;
while (w8 > 0) {
w8--;
eval("var ev = 3; ev * 2");
}
switch (new WeakMap()) {
case /[0-9]+/g:
;
break;
case "x":
case undefined:
print(w8);
default:
eval("1 + 2");
}
print(String([Object.keys({ a: 1 }), Object.keys({}), (/ab+c/ ? 0 : w8)]), `t1 ${`t7 ${+(w8)} end`} end`);
if (w8) {
try {
w8--;
} catch (ex7) {
print(ex7);
}
} else {
debugger;
let n = new WeakMap();
}
w8--;
var [m1, , ...rest6] = [true, 2, 3];
(true ? m1 : Object.keys([1, 2]));
({ p00: w8[Object.keys({})], value1: [false, false] << w8.y, p02: [(function (u) {
return u;
})(''), , [false, , 0]] });
