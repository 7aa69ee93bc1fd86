class B0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B0('\n');
}
m1(a) {
return a + this.x;
}
}
print(B0.make().value);
if (B0.length) {
;
let c = (new Date(10) ? new Set() : (String.raw`a${B0}b`) ?? ((function (u) {
return u;
})(B0)));
} else {
switch (B0) {
case 255:
for (let p of [1, 2, 3]) {
p = String(Math.abs((function (u) {
return u;
})(true), -1));
}
break;
case '0':
case '\u0041':
const a1 = Math.min(B0, ((B0, 3) ? new Map() : { prop0: 1e3, prop1: true }));
default:
B0 = [...[a1, (undefined === /ab+c/ ? `t6 ${a1} end` : new Map())]];
}
if (B0[(B0 ? B0 : B0)] >> ({ prop0: B0, value1: B0 }, `t6 ${B0} end`)) {
print([('\u0041' >= B0 ? B0 : B0), , { y0: ((p, q = true) => p + q)(1e3), p11: B0[true] }], `t1 ${'\n'} end`);
} else {
function make() {
B0 |= Array.from({ length: 0 }, (e, i) => i * NaN);
/ab+c/;
eval("var ev = 3; ev * 2");
return ([]) && ([String.raw`a${B0}b`, , 'str'.value]);
}
print(make());
;
}
}
print((`t0 ${((p, q = Infinity) => p + q)(/[0-9]+/g)} end`) || (String(new WeakMap())));
switch (new Array()) {
case undefined:
try {
;
} catch (e7) {
print(e7);
} finally {
B0 = Object.keys({ a: 1 });
}
break;
case /x/i:
case /ab+c/:
--B0;
default:
let str7 = ((JSON.stringify('\n')) ?? (B0) ? [(B0) && (1e3), , B0] : /ab+c/);
}
print(B0);
try {
B0 = (Array.from({ length: 3 }, (e, i) => i * 255), NaN);
} catch (ex) {
print(ex);
}
for (var k in [1, 2]) {
;
}
for (var i = 0; i < 2; i++) {
function h(item, flag) {
debugger;
if (new.target) {
print('ctor');
}
return 'a,b,c';
}
print(h('a,b,c', undefined));
Object.keys({ a: 1 });
}
function run9(item1) {
B0 |= /[0-9]+/g;
return Object.keys({ a: 1 });
}
print(run9(false));
try {
B0 *= (Object.keys([1, 2]) ? B0.prop >> (B0) && (B0) : `t1 ${(B0, B0)} end`);
B0--;
throw new Error('');
} catch (err) {
print(err);
} finally {
try {
var w = 2;
while (w > 0) {
w--;
eval("[1, 2].length");
}
throw new RangeError('abc');
} catch (e2) {
print(e2);
} finally {
--B0;
}
}
print(((function (u) {
return u;
})((function (u) {
return u;
})(B0)), ([B0, , /x/i]) ?? (String(B0))), B0);
