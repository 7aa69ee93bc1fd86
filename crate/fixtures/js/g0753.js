print({ p10: String(`t0 ${NaN} end`), length1: `t5 ${`t4 ${"x"} end`} end` }, /[0-9]+/g);
if ([{ next0: 2 }, , [...[/[0-9]+/g, true]]] % ((p, q = 255) => p + q)([...[1e3, true]])) {
print(/x/i);
} else {
;
print([...[true, `t3 ${Infinity} end`]], 100);
}
;
var w4 = 3;
while (w4 > 0) {
w4--;
--w4;
}
;
{
try {
{
++w4;
;
}
--w4;
throw new RangeError("x");
} catch (e8) {
print(e8.message);
}
}
w4 <<= (function (u) {
return u;
})((/[0-9]+/g ? new Array() : 'hello'));
function g(val4) {
switch ([JSON.stringify(/ab+c/), , ['0', , val4]] == (w4.value, w4)) {
case NaN:
print(((p, q = false) => p + q)(new Date(0)), [...[(val4 <= 255 ? { x0: val4 } : [undefined, , Infinity]), '\u0041']]);
break;
case true:
case false:
val4 &= (true) || (("x") || (false));
default:
val4 = ({ x: 1, length: 2 }).prop << '';
}
var c = function (...u) {
return u.length;
};
var w7 = 0;
do {
w7 += 1;
} while (w7 < 1);
if (new.target) {
print('ctor');
}
print(arguments.length);
return (String('str'[w4]) ? (function (u) {
return u;
})(0.5) : String(Math.floor(/x/i, val4)));
}
g(false);
for (var k of 'ab') {
w4 <<= ~(Array.from({ length: 0 }, (e, i) => i * 1e3));
}
