for (var k = 0; k < 4; k++) {
switch ((function (u) {
return u;
})([~(NaN), false, k])) {
case /[0-9]+/g:
var m = function (...u) {
return u.length;
};
break;
case "x":
case undefined:
m = m[String.raw`a${String(m)}b`];
default:
print([m, { length0: new Error(3) }, String.raw`a${new Error()}b`]);
}
k <<= '';
}
{
print(/[0-9]+/g);
}
var w = 0;
do {
w += 1;
} while (w < 3);
;
let y = JSON.stringify(10);
for (var k0 = 0; k0 < 1; k0++) {
let item0 = !(String({ x0: 0x10, x1: y }));
--k0;
}
const n9 = `t7 ${(function (u) {
return u;
})(new WeakMap())} end`;
w = `t2 ${n9.next} end`;
{
{
++y;
}
;
}
