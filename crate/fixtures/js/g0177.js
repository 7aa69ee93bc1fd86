print(String.raw`a${[...['abc', ((p, q = /[0-9]+/g) => p + q)(/[0-9]+/g)]]}b`, Math.abs(String(Object.keys({ a: 1 })), +('\n')));
;
try {
;
print((function (u) {
return u;
})([1, 2, 3].y));
} catch (e) {
print(e.message);
}
;
for (let k9 in { a: 1, b: 2 }) {
const a3 = ({ p00: (k9 ? k9 : '\u0041') }, String(Object.keys({ a: 1 })));
}
try {
try {
;
eval("1 + 2");
} catch (ex) {
print(ex.message);
} finally {
;
}
} catch (e8) {
print(e8);
} finally {
debugger;
}
'a,b,c';
var data = [(/x/i ? 'hello' : `t2 ${/[0-9]+/g} end`)];
function make3() {
const flag = new Error(10);
(function (u) {
return u;
})([1, 2, 3][new Set()]);
data |= [(function (u) {
return u;
})(true), , String(Array.from({ length: 4 }, (e, i) => i * 10))];
return Object.keys({ a: 1 });
}
print(make3());
data--;
