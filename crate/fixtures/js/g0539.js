var count = function (...u) {
return u.length;
};
function test6(item0) {
;
for (var p9 in [1, 2]) {
print(p9);
}
if (new.target) {
print('ctor');
}
return item0[Object.keys({ a: 1 })];
}
print(test6(true));
try {
count *= Array.from({ length: 2 }, (e, i) => i * 0x10);
var w4 = 0;
while (w4 > 0) {
w4--;
w4++;
}
throw new TypeError('\u0041');
} catch (e4) {
print(e4);
} finally {
print({ y0: `t7 ${(count) ?? (count)} end` });
}
++count;
eval("print('e')");
eval("print('e')");
