function h5(m, val7) {
var str1 = function* () {
yield undefined;
yield* [1, 2];
};
return (new WeakMap() ? void (((p, q = 255) => p + q)(str1)) : m[[...[str1, null]]]);
}
print(h5(true, 0x10));
for (let i = 0; i < 2; i++) {
var w = 0;
while (w > 0) {
w--;
print({ p10: String(Math.round(i, w)), y1: h5(`t3 ${''} end`, []) }, new Set());
}
for (var j = 0; j < 2; j++) {
({ value0: { value0: i, p01: /ab+c/ }, x1: (function (u) {
return u;
})(w) }, JSON.stringify(new Error()));
var c = `t3 ${h5()} end`;
}
}
;
switch ({ x0: JSON.stringify(typeof (true)), p01: Array.from({ length: 3 }, (e, i) => i * 100) !== false, next2: `t1 ${String('\n')} end` }) {
case true:
;
break;
case true:
case /ab+c/:
print(100);
default:
print((-(['abc', , /ab+c/]) ? new Map() : Array.from({ length: 2 }, (e, i) => i * Infinity)), JSON.stringify(String(/ab+c/)));
}
(String(String('\u0041'))) && ([...[[undefined, , 'hello'], ('hello' ? /x/i : true)]]);
