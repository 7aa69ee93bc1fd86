print(new Set());
print([]);
function run6() {
debugger;
print(/ab+c/);
print(arguments.length);
return [Object.keys({ a: 1 }), [...[((p, q = "x") => p + q)(true), new Date(1)]], `t7 ${({ x: 1, length: 2 }).prop} end`];
}
print(run6());
var data = (u, v = null) => u + v;
for (let k3 in { a: 1, b: 2 }) {
try {
var acc6 = function (...u) {
return u.length;
};
switch (`t6 ${Math.pow(acc6, '\u0041' * k3)} end`) {
case /x/i:
print(Object.keys([1, 2]));
break;
case /ab+c/:
case '\u0041':
(function (u) {
return u;
})((run6(/x/i), void (k3)));
default:
print(((p, q = '\n') => p + q)({ length0: JSON.stringify(acc6), p01: JSON.stringify('\u0041') }));
}
throw new Error('\u0041');
} catch (ex8) {
print(ex8.message);
}
}
var tmp = (u, v = true) => u + v;
tmp -= String.raw`a${(function (u) {
return u;
})([data, , /x/i])}b`;
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(undefined);
}
m1(a) {
return a + this.x;
}
}
print(Box.make().value);
