for (let j = 0; j < 3; j++) {
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
w4++;
}
print(false);
function helper8(arr) {
class Base2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base2(3);
}
m2(a) {
return a + this.x;
}
}
class Point extends Base2 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
for (var j9 = 0; j9 < 3; j9++) {
print(Array.from({ length: 4 }, (e, i) => i * 255));
Base2 *= String([...[[Base2, , 255], (Base2 ? arr : arr)]]);
}
return new Set();
}
helper8(100);
print(JSON.stringify(0x10));
print([new Map(), (null, /[0-9]+/g) + (true ? 255 : 0x10)], '\n');
print('');
