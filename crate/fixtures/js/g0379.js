class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/x/i);
}
m2(a) {
return a + this.x;
}
}
print(Base.make().value);
{
var obj = Math.min(Base.prop, ('str'[Base], [Base, 'a,b,c', '0']));
}
print(((p, q = null) => p + q)(((true ? /ab+c/ : Base)) || ((function (u) {
return u;
})(/ab+c/))), new Array(10));
++Base;
var w5 = 2;
while (w5 > 0) {
w5--;
let y4 = [...[('abc', ['0', , /[0-9]+/g]), (/[0-9]+/g <= null ? '0' : new Object(3))]];
}
var res2 = (u, v = 2) => u + v;
++res2;
