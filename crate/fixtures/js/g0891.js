let n7 = '\u0041';
n7 <<= n7[String(n7)] * (new Date(3) ? ('\u0041', n7) : '0');
print(String(Array.from({ length: 0 }, (e, i) => i * 0)));
;
print([(n7 ? /ab+c/ : true) >>> 'abc'], String(n7));
var item3 = n7.p0;
var w = 0;
while (w > 0) {
w--;
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
}
