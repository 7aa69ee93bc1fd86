debugger;
print('a,b,c');
for (let k of 'ab') {
var w4 = 1;
while (w4 > 0) {
w4--;
var w = 0;
do {
w += 1;
} while (w < 3);
}
}
print(((((p, q = /ab+c/) => p + q)(undefined) ? { length0: '0' } : { value0: 10 }) ? [Array.from({ length: 3 }, (e, i) => i * 1e3), { length0: /[0-9]+/g, y1: /ab+c/, y2: null }, { p10: /ab+c/ }] : ([] ? '0' : { length0: 1e3, length1: '' })), String(((p, q = 0) => p + q)(`t2 ${false} end`)));
var arr6 = function (...u) {
return u.length;
};
;
arr6++;
--arr6;
if (arr6) {
--arr6;
for (var k5 in [1, 2]) {
try {
arr6 += `t7 ${JSON.stringify(new Array())} end`;
arr6;
} catch (ex) {
print(ex.message);
} finally {
eval("var ev = 3; ev * 2");
}
}
} else {
arr6 <<= arr6;
}
