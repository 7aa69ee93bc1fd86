debugger;
print('\u0041');
print(null);
;
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(10);
}
m0(a) {
return a + this.x;
}
}
class Derived8 extends Point {
constructor() {
super(10);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived8().value);
if ('\n') {
eval("print('e')");
if (new Set() >= [~(Derived8), , Array.from({ length: 2 }, (e, i) => i * -1)]) {
for (const k of 'ab') {
var n4 = '\n';
}
Derived8++;
} else {
if ((function (u) {
return u;
})({ next0: Derived8.p1 })) {
--Point;
++Derived8;
Point++;
}
Point = { next0: +((undefined, Infinity)), next1: 'str'.next };
}
if ([String(/ab+c/ != Point), , String.raw`a${String.raw`a${false}b`}b`]) {
try {
eval("[1, 2].length");
throw new TypeError('\u0041');
} catch (e3) {
print(e3);
}
--Point;
} else {
print((new Map() ? Point[[null]] : (function (u) {
return u;
})(Derived8.y)), Array.from({ length: 1 }, (e, i) => i * 0));
}
} else {
for (var p6 of [1, 2, 3]) {
for (let i = 0; i < 4; i++) {
--Point;
i--;
}
}
}
var w3 = 3;
while (w3 > 0) {
w3--;
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
}
print(new Map(), typeof (JSON.stringify(undefined + /x/i)));
function check0() {
for (let i2 = 0; i2 < 4; i2++) {
Point *= `t8 ${String.raw`a${Infinity}b`} end` > Object.keys({});
w3 <<= (function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * 10));
}
var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
return [Derived8.value, , true];
}
print(check0());
print(String(String(Object.keys({ a: 1 }))), [new WeakMap()]);
w3 = (function (u) {
return u;
})(((/ab+c/) || ('\u0041'), Math.round(/x/i, "x")));
