for (let k7 in { a: 1, b: 2 }) {
print(1, String((function (u) {
return u;
})(String(false))));
}
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(255);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
for (var k18 = 0; k18 < 5; k18++) {
try {
;
var [c, , ...rest] = ['abc', 2, 3];
} catch (e) {
print(e.message);
}
print(`t7 ${Base['0']} end` > /[0-9]+/g);
}
switch ([...[`t7 ${!(10)} end`, 3]]) {
case /x/i:
eval("1 + 2");
break;
case 255:
case 'hello':
;
default:
Base[[Base, , Math.max(Base, Base)]];
}
Base = Object.keys({ a: 1 });
Base = ((~(Base)) && (Object.keys({ a: 1 }))) ?? (Base.value);
var w9 = 3;
while (w9 > 0) {
w9--;
eval("var ev = 3; ev * 2");
}
--w9;
