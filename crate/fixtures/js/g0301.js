{
function wrap9() {
var m1 = new Date(0);
m1 = [];
m1 = JSON.stringify('hello');
if (new.target) {
print('ctor');
}
return [(('\u0041' ? 100 : /x/i), Object.keys({})), , (JSON.stringify(m1) ? ((p, q = "x") => p + q)(/ab+c/) : (null ? m1 : m1))];
}
print(wrap9());
}
try {
var item1 = JSON.stringify(({ x: 1, length: 2 })[/[0-9]+/g]);
throw new RangeError('hello');
} catch (err6) {
print(err6.message);
}
print('abc');
for (var j = 0; j < 1; j++) {
eval("1 + 2");
{
const a = (function (u) {
return u;
})(void (({ x: 1, length: 2 })[j]));
var data3 = String(String(String.raw`a${0}b`));
}
}
print("x");
try {
((p, q = null) => p + q)(+(0.5));
if ([(['hello'] ? undefined : 'a,b,c' % true), , ((true, null) ? null : Math.pow('', false))]) {
eval("var ev = 3; ev * 2");
}
} catch (e) {
print(e);
}
var x = String.raw`a${/ab+c/}b`;
function check7(z, item) {
JSON.stringify(/[0-9]+/g);
function wrap6(str) {
z |= `t3 ${+(item <= x)} end`;
if (new.target) {
print('ctor');
}
return Math.sqrt(z[{ value0: undefined }], ((p, q = /[0-9]+/g) => p + q)(new Date(1)));
}
wrap6("x");
if (new.target) {
print('ctor');
}
return z.next;
}
print(check7(0, /ab+c/));
