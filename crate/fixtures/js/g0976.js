var w8 = 0;
do {
w8 += 1;
} while (w8 < 1);
for (let k of []) {
;
}
for (var k6 in { a: 1, b: 2 }) {
try {
try {
print(Object.keys({ a: 1 }), new Map());
} catch (e) {
print(e);
}
k6 = ((p, q = 10) => p + q)(w8);
} catch (err) {
print(err);
} finally {
debugger;
}
}
var arr6 = { w8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
eval("var ev = 3; ev * 2");
const acc = w8;
if ((function (u) {
return u;
})(((p, q = 1) => p + q)((function (u) {
return u;
})(/[0-9]+/g)))) {
print(((function (u) {
return u;
})(acc.x)) || (((p, q = /x/i) => p + q)(Object.keys([1, 2]))));
var acc1 = (u, v = false) => u + v;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
const count9 = acc.length != acc;
var w = 0;
do {
w += 1;
} while (w < 1);
