var w = 0;
do {
w += 1;
} while (w < 2);
;
eval("var ev = 3; ev * 2");
w = Array.from({ length: 0 }, (e, i) => i * 10);
w++;
[new Set()];
print(Array.from({ length: 3 }, (e, i) => i * Infinity));
--w;
switch (Object.keys([1, 2])) {
case 'a,b,c':
var a8 = /[0-9]+/g;
break;
case 'abc':
case false:
w -= [1, 2, 3].next;
default:
a8 -= -([]);
}
function f8(c, m2) {
w--;
function helper() {
--c;
eval("[1, 2].length");
[...[String(Object.keys({ a: 1 })), String.raw`a${Object.keys([1, 2])}b`]];
return { value0: Object.keys({}), p11: new Object(3) };
}
print(helper());
print(Array.from({ length: 0 }, (e, i) => i * 1e3));
print(arguments.length);
return `t6 ${Array.from({ length: 1 }, (e, i) => i * 100)} end`;
}
print(f8('\n', /[0-9]+/g));
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(null);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
