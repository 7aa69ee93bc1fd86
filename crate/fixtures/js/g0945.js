;
try {
print(/x/i);
class B5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B5(false);
}
m0(a) {
return a + this.x;
}
}
print(B5.make().value);
throw new TypeError('abc');
} catch (ex) {
print(ex.message);
}
var item = { item, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
item = [typeof ((/ab+c/, true)), '', [JSON.stringify(item)]];
Array.from({ length: 1 }, (e, i) => i * 10);
item = JSON.stringify((((p, q = '\u0041') => p + q)(true) ? JSON.stringify(100) : String.raw`a${item}b`));
var w0 = 0;
do {
w0 += 1;
} while (w0 < 2);
w0++;
item |= -([...[w0, w0]]) < item;
print(Object.keys([1, 2]));
