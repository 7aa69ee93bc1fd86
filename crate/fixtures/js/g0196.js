eval("var ev = 3; ev * 2");
const tmp = [JSON.stringify(((p, q = /[0-9]+/g) => p + q)(true)), , String.raw`a${{ x0: '', next1: 100, next2: /x/i }}b`];
eval("var ev = 3; ev * 2");
function wrap7() {
var w = 3;
while (w > 0) {
w--;
var flag = (`t4 ${[...[w, '\u0041']]} end`, `t3 ${tmp.next} end`);
}
try {
w |= (true ? (function (u) {
return u;
})(String.raw`a${w}b`) : String.raw`a${`t0 ${w} end`}b`);
++w;
} catch (err6) {
print(err6.message);
}
return w;
}
print(wrap7());
var z7 = { tmp, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
function wrap2(b, y5) {
eval("var ev = 3; ev * 2");
print(((p, q = /[0-9]+/g) => p + q)(!(Math.max(y5, tmp))));
y5++;
print(arguments.length);
return { prop0: new Map(), p01: [...["x", /x/i]] != [0.5, z7] };
}
wrap2('\u0041', null);
try {
let x6 = ({ x: 1, length: 2 }).next;
for (let k of []) {
function h2(arr) {
k = tmp;
Array.from({ length: 4 }, (e, i) => i * 1) >> undefined;
;
print(arguments.length);
return [[-(tmp), String(z7)], , x6];
}
print(h2(/ab+c/));
}
throw new RangeError("x");
} catch (e6) {
print(e6);
} finally {
for (let p0 of []) {
for (let p of [1, 2, 3]) {
;
}
}
}
