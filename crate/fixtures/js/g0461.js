{
;
}
function check() {
eval("var ev = 3; ev * 2");
if (new.target) {
print('ctor');
}
return String.raw`a${'\n'}b`;
}
print(check());
{
;
}
;
var w4 = 3;
while (w4 > 0) {
w4--;
{
w4++;
}
}
if ([w4, , (new Set() ? [w4] : Array.from({ length: 4 }, (e, i) => i * 1))]) {
class C1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C1('0');
}
m2(a) {
return a + this.x;
}
}
print(C1.make().value);
print(w4);
print(C1.x, new Error(1));
}
;
--w4;
