var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
var w8 = 3;
while (w8 > 0) {
w8--;
for (let p in { a: 1, b: 2 }) {
p <<= String.raw`a${/ab+c/}b`;
}
}
;
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
class Box6 extends B {
constructor() {
super(1e3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box6().value);
for (let k15 of 'ab') {
w6++;
}
