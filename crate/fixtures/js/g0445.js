{
const obj = [];
}
for (var k of 'ab') {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(0x10);
}
m2(a) {
return a + this.x;
}
}
print(C.make().value);
}
try {
({ p10: String(`t7 ${null} end`), p01: 'str'.length, x2: 2 });
throw new TypeError("x");
} catch (e) {
print(e.message);
}
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
for (const k1 of 'ab') {
switch (((p, q = '0') => p + q)(((p, q = '\u0041') => p + q)([...['', w4]]))) {
case 'hello':
--w4;
break;
case false:
case /x/i:
w4 = [...[w4[String.raw`a${NaN}b`], ([0.5, , 0], [])]];
default:
print(w4.y);
}
}
var w = 0;
do {
w += 1;
} while (w < 1);
