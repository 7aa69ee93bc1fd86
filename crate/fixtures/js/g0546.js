var w8 = 2;
while (w8 > 0) {
w8--;
var y1 = async function () {
return await /ab+c/;
};
}
class Box1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box1(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Box1.make().value);
debugger;
var val3 = async function () {
return await /x/i;
};
--Box1;
var a4 = function (...u) {
return u.length;
};
var w14 = 3;
while (w14 > 0) {
w14--;
w14--;
}
w8++;
eval("var ev = 3; ev * 2");
for (let p of []) {
var str = p.length;
}
Object.keys({ a: 1 });
