;
;
var w = 3;
while (w > 0) {
w--;
print(w, { length0: Math.pow(`t2 ${/ab+c/} end`, `t2 ${w} end`), p01: w });
}
w = ((p, q = null) => p + q)([({ x: 1, length: 2 }).x, (w, undefined)]);
var res7 = w[[...[w, Array.from({ length: 2 }, (e, i) => i * NaN)]]];
function helper1() {
function test(m, obj) {
print(w, String(`t5 ${JSON.stringify(res7)} end`));
print(arguments.length);
return new WeakMap() > ((obj, undefined) ? (res7, w) : ('\n' ? res7 : null));
}
print(test(/x/i, ''));
const c5 = ((p, q = /[0-9]+/g) => p + q)(((p, q = 'hello') => p + q)(w % w));
w++;
return `t8 ${c5} end`;
}
print(helper1());
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
const acc4 = `t5 ${res7.value} end`;
