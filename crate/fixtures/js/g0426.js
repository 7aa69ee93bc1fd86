;
print(null);
print(0);
(function (u) {
return u;
})(Array.from({ length: 0 }, (e, i) => i * 0x10)) >>> Array.from({ length: 2 }, (e, i) => i * 3);
{
var w9 = 1;
while (w9 > 0) {
w9--;
for (var p in [1, 2]) {
eval("var ev = 3; ev * 2");
}
}
if ([String.raw`a${/[0-9]+/g}b`, (w9 << 1e3) ?? (w9)]) {
var w7 = 1;
while (w7 > 0) {
w7--;
w7++;
}
var w5 = 0;
while (w5 > 0) {
w5--;
eval("[1, 2].length");
}
}
}
print([Object.keys({ a: 1 }), , (true ? 'str'[3] : String.raw`a${null}b`)], String.raw`a${{ p10: JSON.stringify(-1), x1: ({ x: 1, length: 2 })[/ab+c/] }}b`);
;
var arr = true;
