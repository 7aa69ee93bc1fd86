eval("1 + 2");
eval("var ev = 3; ev * 2");
[/x/i];
if (new Object()) {
var w = 0;
do {
w += 1;
} while (w < 4);
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(undefined);
}
m0(a) {
return a + this.x;
}
}
class A0 extends Point {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A0().value);
eval("1 + 2");
} else {
print(/[0-9]+/g);
}
try {
var data = Math.round(+(Math.round("x", 255)), Object.keys({}));
try {
const n = { p10: [[true, data, 255], , String(/[0-9]+/g)] };
data++;
} catch (e5) {
print(e5.message);
}
} catch (e1) {
print(e1.message);
}
for (var j6 = 0; j6 < 5; j6++) {
switch ([1, 2, 3].prop) {
case 0x10:
j6 -= (function (u) {
return u;
})((Object.keys({})) || (String(j6)));
break;
case '':
case 0:
print(1e3);
default:
j6 = [...[(new Error(3)) || ([j6, /[0-9]+/g, j6]), (Math.abs(undefined, '0'), [j6, /ab+c/, j6])]];
}
--j6;
}
let acc = [...[[1, 2, 3].prop, /x/i]];
acc &= ((new Set()) ?? (String(acc)), { length0: ((p, q = null) => p + q)(1e3), prop1: -(Infinity), length2: (acc) && (acc) });
acc = Object.keys({});
