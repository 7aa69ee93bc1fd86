switch (JSON.stringify(Array.from({ length: 4 }, (e, i) => i * -1)) < String('\u0041')) {
case 'hello':
class Box4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box4(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(Box4.make().value);
break;
case null:
case 3:
Box4++;
default:
({ y0: Object.keys({}) });
}
var w8 = 0;
do {
w8 += 1;
} while (w8 < 2);
try {
w8++;
throw new TypeError('\u0041');
} catch (err4) {
print(err4.message);
}
for (var k = 0; k < 2; k++) {
function run6() {
--w8;
Math.pow(-((true) ?? (/[0-9]+/g)), (String('')) ?? ({ prop0: k, p11: k, next2: 0 }));
return w8.length;
}
print(run6());
for (const p of [1, 2, 3]) {
if ([...[(function (u) {
return u;
})(String(w8)), [...[w8, Math.sqrt(p, undefined)]]]]) {
++k;
}
}
}
