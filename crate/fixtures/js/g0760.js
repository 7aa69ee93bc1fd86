(+(Math.round(false, NaN)), Array.from({ length: 0 }, (e, i) => i * Infinity));
print('hello');
var w = 0;
do {
w += 1;
} while (w < 3);
w *= [[...[w, 'a,b,c']]] | w.x;
++w;
var m = [new Date(0)];
print((new Map(), m[(m, 100)]));
try {
++w;
print(new Array(), w);
} catch (e0) {
print(e0.message);
}
