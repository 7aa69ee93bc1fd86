print(/ab+c/);
if (((p, q = "x") => p + q)(String(Object.keys({})))) {
print(/[0-9]+/g, `t6 ${((0.5) ?? ('\u0041'), [...[0.5, null]])} end`);
}
var w6 = 2;
while (w6 > 0) {
w6--;
;
}
w6--;
print(0.5);
var w = 0;
do {
w += 1;
} while (w < 1);
w += [(function (u) {
return u;
})(/x/i), String.raw`a${true << "x"}b`, (Object.keys([1, 2])) && (`t7 ${w6} end`)];
var w27 = 2;
while (w27 > 0) {
w27--;
print(new Map(), String(Math.max(Object.keys({ a: 1 }), w6 >>> w6)));
}
