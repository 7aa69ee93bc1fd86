{
var c3 = function* () {
yield 0;
yield* [1, 2];
};
}
eval("[1, 2].length");
var z = new Date(0);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
function compute7(key7) {
key7 = Object.keys({});
key7 <<= 1e3;
if (new.target) {
print('ctor');
}
print(arguments.length);
return (function (u) {
return u;
})(((p, q = '') => p + q)(z)) >>> false;
}
print(compute7(/x/i));
eval("var ev = 3; ev * 2");
z;
{
switch (new Error(3)) {
case 0:
;
break;
case '\u0041':
case /ab+c/:
z = new WeakMap();
default:
;
}
}
if (Math.abs(((p, q = null) => p + q)(Object.keys([1, 2])), (z, 255 - undefined))) {
{
for (var k of [1, 2, 3]) {
z *= k.p1;
}
print(z.x, (function (u) {
return u;
})(((p, q = 'abc') => p + q)((z, z))));
}
} else {
switch (~(((p, q = '') => p + q)((function (u) {
return u;
})('')))) {
case /[0-9]+/g:
eval("print('e')");
break;
case false:
case Infinity:
--z;
default:
eval("1 + 2");
}
--z;
}
[[10, Array.from({ length: 3 }, (e, i) => i * 0), Math.sqrt('0', z)], , JSON.stringify('hello') <= String(z)];
