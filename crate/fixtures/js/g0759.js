;
if ([Math.abs(((p, q = '0') => p + q)('a,b,c'), (2 ? /[0-9]+/g : undefined)), , '\u0041']) {
[new WeakMap(), (Object.keys({})) ?? ((0.5 ? '0' : '\n'))];
} else {
print(/[0-9]+/g, { length0: 'str'[255], p01: new Set() });
eval("var ev = 3; ev * 2");
}
var w6 = 1;
while (w6 > 0) {
w6--;
{
print(String.raw`a${(Object.keys({}), [3, w6])}b`);
}
}
for (var k = 0; k < 1; k++) {
print(-(w6), w6);
print((`t3 ${new Date(1)} end`) || ([{ p00: k }, !(k)]), k);
}
w6 &= (({ x: 1, length: 2 }).value ? w6 : ('a,b,c', [1, 2, 3].p1));
switch (new Date(10)) {
case 0x10:
print(({ x: 1, length: 2 })[(function (u) {
return u;
})(w6)]);
break;
case 'hello':
case '':
String(w6.p0 == Object.keys([1, 2]));
default:
w6 *= new Error(3);
}
var a = u => {
return u;
};
{
try {
a = [[((p, q = 10) => p + q)(a), , a], (w6 ? (a) ?? (a) : `t1 ${a} end`), Object.keys([1, 2])];
throw new Error('');
} catch (err5) {
print(err5.message);
} finally {
w6 = Math.round(/[0-9]+/g, [...[['abc', , w6], []]]);
}
}
w6--;
switch (Array.from({ length: 0 }, (e, i) => i * 10)) {
case false:
a = w6;
break;
case true:
case "x":
[String.raw`a${/x/i}b`, , [["x", , a], ['0', /[0-9]+/g, a], { value0: a }]];
default:
a -= `t1 ${(`t8 ${a} end` ? [undefined, , w6] : ((p, q = 3) => p + q)('abc'))} end`;
}
var n = w6[new Object(10)];
