print(/x/i);
;
for (var p of 'ab') {
p = String.raw`a${Object.keys({ a: 1 })}b`;
}
const count = Object.keys({});
for (var k of 'ab') {
var res = ((p, q = 0x10) => p + q)(count);
}
function wrap0(arr9, obj3) {
--arr9;
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue outer;
}
}
return Array.from({ length: 4 }, (e, i) => i * 100);
}
print(wrap0(1e3, '\u0041'));
Object.keys({});
var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(false);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
var w8 = 0;
do {
w8 += 1;
} while (w8 < 1);
var n1 = u => {
return u;
};
