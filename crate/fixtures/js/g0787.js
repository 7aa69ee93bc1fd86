var str = { str, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
var w7 = 0;
do {
w7 += 1;
} while (w7 < 1);
str &= new WeakMap();
w7 = ((function (u) {
return u;
})((function (u) {
return u;
})(w7)), 1e3);
eval("print('e')");
print(((null * str, JSON.stringify(/x/i)) ? Object.keys({}) : (str) && (new Error(3))));
try {
var w16 = 0;
do {
w16 += 1;
} while (w16 < 1);
} catch (e) {
print(e.message);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
var w = 2;
while (w > 0) {
w--;
if ([...[(function (u) {
return u;
})(/ab+c/ !== w7), +(w7 * 10)]]) {
str |= String(({ x: 1, length: 2 })[/x/i]);
} else {
eval("[1, 2].length");
}
}
const b5 = [...[Array.from({ length: 1 }, (e, i) => i * 2), w7['hello'] << Math.sqrt(w, 0)]];
function compute() {
if ((new Array(), undefined)) {
var tmp8 = { y0: (`t5 ${b5} end`) && (((p, q = /ab+c/) => p + q)(false)), y1: (((p, q = '\u0041') => p + q)(/x/i), w.next) };
}
w--;
if (new.target) {
print('ctor');
}
return Math.round(w, void (1e3));
}
print(compute());
