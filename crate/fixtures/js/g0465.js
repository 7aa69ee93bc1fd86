;
class Derived1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived1(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
print(Derived1.make().value);
print(Infinity);
eval("print('e')");
eval("print('e')");
var w0 = 1;
while (w0 > 0) {
w0--;
Derived1 = ([...[[...['', Derived1]], undefined]], String((255) && (false)));
}
++Derived1;
function f() {
var w = 0;
do {
w += 1;
} while (w < 2);
print((function (u) {
return u;
})(new Error(1)));
var key8 = String([1, 2, 3][`t4 ${w} end`]);
if (new.target) {
print('ctor');
}
return new Object(3);
}
print(f());
var w28 = 0;
do {
w28 += 1;
} while (w28 < 3);
