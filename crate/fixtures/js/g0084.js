print(((p, q = true) => p + q)((/x/i) || (/[0-9]+/g)), [[null, String.raw`a${'0'}b`, (function (u) {
return u;
})('\n')], , [] != Object.keys({ a: 1 })]);
if ([...[`t6 ${'str'.p1} end`, [...[String.raw`a${'abc'}b`, Object.keys({ a: 1 })]]]]) {
for (var k of []) {
if ([k[[]], k]) {
;
}
}
"x";
}
var w = 3;
while (w > 0) {
w--;
--w;
}
try {
w += JSON.stringify({ prop0: { p10: /x/i, length1: w } });
} catch (e7) {
print(e7);
}
try {
class C0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C0('\u0041');
}
m2(a) {
return a + this.x;
}
}
print(C0.make().value);
var key4 = { C0, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
throw new TypeError('');
} catch (ex) {
print(ex);
}
var acc8 = Math.abs((function (u) {
return u;
})(Object.keys({})), +(JSON.stringify(w)));
Math.sqrt(Array.from({ length: 2 }, (e, i) => i * -1), String((function (u) {
return u;
})(0.5)));
eval("var ev = 3; ev * 2");
if (Object.keys({ a: 1 })) {
debugger;
function compute8(tmp) {
[tmp, , (acc8 - true ? new WeakMap() : String.raw`a${tmp}b`)];
w++;
return JSON.stringify([...[[1, 2, 3][1], [...[w, acc8]]]]);
}
compute8(/ab+c/);
} else {
try {
w++;
let acc2 = Math.floor(Array.from({ length: 4 }, (e, i) => i * 10), [...[[acc8, , acc8], Math.round(w, /ab+c/)]]);
} catch (e) {
print(e);
}
--w;
}
