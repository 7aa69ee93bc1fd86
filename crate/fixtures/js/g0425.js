try {
;
throw new Error('\u0041');
} catch (e9) {
print(e9.message);
} finally {
let tmp = Object.keys({});
}
var w = 3;
while (w > 0) {
w--;
print(String([...[[1, 2, 3].p1, w.p1]]), (((1) ?? (false) ? String.raw`a${0}b` : ('\u0041' ? 2 : w))) || (String.raw`a${String(w)}b`));
}
for (var i = 0; i < 5; i++) {
(JSON.stringify(i), i.p0) << { p10: i };
function make3(count) {
count |= [[/ab+c/ * null, Object.keys([1, 2]), JSON.stringify(2)]];
;
count--;
return { length0: String(w), y1: i[((p, q = undefined) => p + q)(/ab+c/)], p12: +(/ab+c/) >> (/x/i) && (i) };
}
print(make3(''));
}
eval("var ev = 3; ev * 2");
w = [(Object.keys([1, 2])) && (String(w)), new Date(10), ((NaN) && (w) ? String.raw`a${w}b` : JSON.stringify(w))];
print(w);
class B9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B9(3);
}
m0(a) {
return a + this.x;
}
}
print(B9.make().value);
var acc1 = function* () {
yield true;
yield* [1, 2];
};
