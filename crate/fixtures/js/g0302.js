Object.keys({ a: 1 });
switch (undefined) {
case /ab+c/:
var [flag0, , ...tail2] = [/x/i, 2, 3];
break;
case /ab+c/:
case 0.5:
flag0 = (/ab+c/ ? String(Object.keys({ a: 1 })) : 'str'.y);
default:
'0';
}
var tmp = u => {
return u;
};
print([new Set(), , ((function (u) {
return u;
})(tmp)) || ((function (u) {
return u;
})(undefined))], 0x10);
tmp = [String.raw`a${((p, q = 1) => p + q)(tmp)}b`, tmp];
print(tmp, String.raw`a${(function (u) {
return u;
})(new Set())}b`);
tmp &= `t2 ${'0'} end`;
debugger;
(String(new Date()) ? tmp.x : (function (u) {
return u;
})(String(tmp)));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
if ('\n') {
var w3 = 0;
while (w3 > 0) {
w3--;
w3 *= new Error() % Math.pow(Object.keys([1, 2]), void (w3));
}
}
