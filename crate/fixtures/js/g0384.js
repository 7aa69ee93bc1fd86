var w4 = 2;
while (w4 > 0) {
w4--;
;
}
if (new Set()) {
++w4;
var y1 = async function () {
return await '\u0041';
};
} else {
w4++;
}
class Point5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point5(-1);
}
m1(a) {
return a + this.x;
}
}
print(Point5.make().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
