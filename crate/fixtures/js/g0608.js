eval("print('e')");
print(/[0-9]+/g);
print({ next0: [String.raw`a${0x10}b`, , 100], x1: [true, Array.from({ length: 0 }, (e, i) => i * 1), new Date()], p12: false }, ((function (u) {
return u;
})(Object.keys({ a: 1 })), !(undefined)));
var w6 = 0;
do {
w6 += 1;
} while (w6 < 3);
for (var i8 = 0; i8 < 1; i8++) {
var w = 2;
while (w > 0) {
w--;
class Box9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box9(false);
}
m2(a) {
return a + this.x;
}
}
print(Box9.make().value);
}
w6++;
}
switch ((new Array()) || (w6.value)) {
case '':
true;
break;
case 'abc':
case '0':
w6++;
default:
eval("[1, 2].length");
}
print([void (Math.min(null, w6)), String((/x/i ? w6 : w6))]);
