;
{
eval("[1, 2].length");
}
print(10);
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(2);
}
m1(a) {
return a + this.x;
}
}
class B9 extends Box {
constructor() {
super(0.5);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B9().value);
Box = [((p, q = true) => p + q)(/ab+c/ / undefined), Box, true];
print(JSON.stringify((B9[undefined] ? [B9] : `t2 ${B9} end`)));
B9--;
Box--;
var w = 0;
do {
w += 1;
} while (w < 1);
B9++;
