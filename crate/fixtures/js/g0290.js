function h(m, a5) {
try {
eval("1 + 2");
} catch (err) {
print(err.message);
} finally {
a5 = ((p, q = '\u0041') => p + q)([true, ((p, q = '') => p + q)(null), void (/[0-9]+/g)]);
}
(({ x0: a5, p01: m } ? Array.from({ length: 4 }, (e, i) => i * 100) : '\u0041'), (Array.from({ length: 0 }, (e, i) => i * 10) ? ('\n' ? m : 'hello') : false));
if (new.target) {
print('ctor');
}
return (/[0-9]+/g) || ([(/ab+c/, m), [...[a5, a5]], m % a5]);
}
h(255, /[0-9]+/g);
{
function test8() {
eval("[1, 2].length");
;
const acc = Object.keys({ a: 1 });
if (new.target) {
print('ctor');
}
return [new WeakMap(), [1, 2, 3].prop];
}
test8();
}
switch ((function (u) {
return u;
})(!((1) || (255)))) {
case 'hello':
for (var p0 in [1, 2]) {
p0--;
}
break;
case 'hello':
case '':
print(/[0-9]+/g);
default:
'0';
}
;
{
var res = function (...u) {
return u.length;
};
}
print(JSON.stringify([String.raw`a${/x/i}b`, , ('\u0041') || (/x/i)]));
print(/x/i);
for (var k = 0; k < 3; k++) {
--k;
let z = new WeakMap();
}
for (var p9 in { a: 1, b: 2 }) {
--p9;
}
function g1(flag) {
String.raw`a${(function (u) {
return u;
})(flag)}b` >>> flag[(false, flag)];
if (new.target) {
print('ctor');
}
print(arguments.length);
return h(h(flag[/[0-9]+/g], (function (u) {
return u;
})(flag)));
}
print(g1('abc'));
