print('');
String(Math.min([...['\u0041', 100]], ({ x: 1, length: 2 }).x));
var w = 0;
do {
w += 1;
} while (w < 4);
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
var w15 = 0;
do {
w15 += 1;
} while (w15 < 1);
print([{ p10: new Error(1), prop1: w15 | w, prop2: null }], `t3 ${(function (u) {
return u;
})(Math.round(w15, w15))} end`);
w |= String(Object.keys([1, 2]));
