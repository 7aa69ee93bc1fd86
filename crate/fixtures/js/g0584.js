for (var k2 in { a: 1, b: 2 }) {
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Derived.make().value);
}
try {
var b3 = async function () {
return await 'a,b,c';
};
throw new TypeError('');
} catch (e6) {
print(e6.message);
}
const item = [void ((255 ? '\n' : undefined)), , [...[Math.floor(/[0-9]+/g, undefined), ("x", /x/i)]]];
{
for (var k of [1, 2, 3]) {
switch (`t5 ${(function (u) {
return u;
})(item)} end`) {
case Infinity:
print(new WeakMap(), String(/x/i));
break;
case '\n':
case NaN:
item.next;
default:
eval("var ev = 3; ev * 2");
}
}
}
