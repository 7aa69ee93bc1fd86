eval("print('e')");
;
var w = 0;
do {
w += 1;
} while (w < 4);
--w;
--w;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(0.5);
}
m0(a) {
return a + this.x;
}
}
class Point extends Box {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Point().value);
