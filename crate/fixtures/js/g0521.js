var key9 = ((p, q = true) => p + q)(/ab+c/);
;
var tmp = function (...u) {
return u.length;
};
tmp <<= [(String(/[0-9]+/g), []), , Array.from({ length: 1 }, (e, i) => i * 3)];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
switch ([tmp, `t6 ${(/[0-9]+/g ? key9 : true)} end`]) {
case '0':
tmp &= String.raw`a${JSON.stringify((key9 ? false : false))}b`;
break;
case '':
case 0:
(String.raw`a${new WeakMap()}b`) && (Array.from({ length: 1 }, (e, i) => i * 2));
default:
++key9;
}
tmp |= String.raw`a${(Array.from({ length: 1 }, (e, i) => i * 0x10) ? null : Object.keys([1, 2]))}b`;
var w = 0;
do {
w += 1;
} while (w < 3);
{
var str = async function () {
return await false;
};
;
}
eval("var ev = 3; ev * 2");
let str7 = ((p, q = 0x10) => p + q)(tmp);
