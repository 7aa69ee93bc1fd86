var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
var w5 = 1;
while (w5 > 0) {
w5--;
w5 *= (Array.from({ length: 3 }, (e, i) => i * 2), typeof (Array.from({ length: 2 }, (e, i) => i * -1)));
}
;
let a4 = [JSON.stringify([1, 2, 3]['hello']), { p00: w5.next }];
print(String.raw`a${String.raw`a${JSON.stringify(w5)}b`}b`, `t7 ${[a4[a4], Math.floor(w5, undefined)]} end`);
String(Object.keys({}));
