var str = async function () {
return await 1e3;
};
if (`t6 ${str.next} end`) {
str--;
for (let p in { a: 1, b: 2 }) {
str += String.raw`a${JSON.stringify(null)}b`;
}
print((function (u) {
return u;
})({ y0: (true ? str : /ab+c/), p01: 2 }), [...[str[(/[0-9]+/g) || (null)], String.raw`a${(false, true)}b`]]);
} else {
if (({ next0: str, value1: new Set(), length2: (false ? /[0-9]+/g : str) }) ?? (str)) {
{
print(String.raw`a${str.p1}b`);
eval("var ev = 3; ev * 2");
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
return new C(100);
}
m2(a) {
return a + this.x;
}
}
class C1 extends C {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C1().value);
C = C.length;
}
try {
var a = typeof (new Error(3));
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
} catch (e8) {
print(e8);
} finally {
str = (`t8 ${str} end`) || ([String.raw`a${true}b`, , Object.keys([1, 2])]);
}
}
print(JSON.stringify([]), new Error(10));
for (var p8 in { a: 1, b: 2 }) {
((function (u) {
return u;
})([p8, 'abc', p8]), Object.keys({ a: 1 }));
}
const flag = new Array();
str = Array.from({ length: 4 }, (e, i) => i * Infinity);
for (let p2 in [1, 2]) {
for (var k of []) {
eval("var ev = 3; ev * 2");
}
}
--str;
str *= !(new WeakMap());
eval("print('e')");
