print((Math.pow(/ab+c/, (function (u) {
return u;
})('a,b,c')), [...[((p, q = true) => p + q)(undefined), ('0' ? '\n' : /ab+c/)]]), [...[0.5, /[0-9]+/g]] / (function (u) {
return u;
})(/[0-9]+/g) << String.raw`a${String.raw`a${'\u0041'}b`}b`);
try {
var x0 = { x0, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['']: 1, ...{ q: 2 } };
print(Array.from({ length: 4 }, (e, i) => i * 0.5), ([`t2 ${true} end`, , new Object(10)], JSON.stringify(Math.sqrt(/[0-9]+/g, x0))));
} catch (e3) {
print(e3);
} finally {
let flag = null;
}
eval("[1, 2].length");
;
new WeakMap();
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
