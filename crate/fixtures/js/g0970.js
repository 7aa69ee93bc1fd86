;
eval("1 + 2");
for (let k = 0; k < 3; k++) {
;
k--;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
print(/ab+c/);
class B1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B1(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
print(B1.make().value);
var str9 = !(/x/i);
var item = function (...u) {
return u.length;
};
