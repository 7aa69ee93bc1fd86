var w = 0;
do {
w += 1;
} while (w < 3);
print(Math.min(Math.min(w, w), new Date()) % [...['hello' < w, [...[w, /ab+c/]]]], w.p1);
for (let k5 in { a: 1, b: 2 }) {
try {
print((function (u) {
return u;
})(Math.min(Object.keys({ a: 1 }), Object.keys({ a: 1 }))), new Object(0));
var w9 = 1;
while (w9 > 0) {
w9--;
;
}
throw new Error('hello');
} catch (err1) {
print(err1);
} finally {
k5++;
}
}
print(!(Object.keys([1, 2])), (Object.keys({}) ? w : Object.keys([1, 2])));
w--;
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
eval("var ev = 3; ev * 2");
try {
--w;
throw new Error('0');
} catch (err) {
print(err.message);
}
