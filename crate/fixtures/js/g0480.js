print(/[0-9]+/g);
print({ length0: (Math.max(false, false), 0x10) }, [1, 2, 3][false]);
Array.from({ length: 1 }, (e, i) => i * 10);
;
var w = 2;
while (w > 0) {
w--;
;
}
var w19 = 0;
do {
w19 += 1;
} while (w19 < 2);
for (let j3 = 0; j3 < 3; j3++) {
print([...[j3, (Object.keys([1, 2]) ? String(j3) : /x/i)]]);
j3 = new Date(3);
}
eval("print('e')");
print(String.raw`a${JSON.stringify({ value0: /[0-9]+/g, p11: NaN, y2: '\u0041' })}b`, JSON.stringify(((p, q = 100) => p + q)(Math.round(/ab+c/, w19))));
w++;
w = new Map() / { next0: w19 != false, prop1: (true) || (w19) };
