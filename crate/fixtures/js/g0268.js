var w = 1;
while (w > 0) {
w--;
try {
print(Array.from({ length: 0 }, (e, i) => i * 0), [...[[], ((p, q = /[0-9]+/g) => p + q)(w[w])]]);
print(String(Math.min(w, String(w))));
} catch (err6) {
print(err6);
} finally {
print((JSON.stringify(!(w)), ((p, q = 0x10) => p + q)([...[w, w]])), (JSON.stringify('\n') * ({ x: 1, length: 2 })['abc'], ~(1 < /[0-9]+/g)));
}
}
print(typeof ([(w) ?? ('0'), [/x/i, , '\u0041']]));
class Point1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point1(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Point1.make().value);
--w;
w <<= Math.round(String.raw`a${Point1}b`, (Point1 ? String(/[0-9]+/g) : new Set()));
Point1 <<= [Point1, , Array.from({ length: 1 }, (e, i) => i * 255)];
switch (Point1) {
case 0.5:
print(([Array.from({ length: 1 }, (e, i) => i * 1), , new Map()]) && ([Array.from({ length: 3 }, (e, i) => i * Infinity)]), JSON.stringify([...[(null) || (Point1), Array.from({ length: 4 }, (e, i) => i * 0.5)]]));
break;
case 0.5:
case null:
;
default:
let x = `t0 ${Point1} end`;
}
eval("var ev = 3; ev * 2");
{
print({ value0: (new Map() ? NaN : new Map()) }, String(~(String.raw`a${w}b`)));
}
