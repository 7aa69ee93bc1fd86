var a = (true ? new Error() : new Date());
a <<= [...[a, Math.max(a, 2) !== a.prop]];
const z8 = ('\u0041') && ([]);
var w = 0;
do {
w += 1;
} while (w < 4);
const z = [JSON.stringify((w ? 0x10 : w)), , w];
(function (u) {
return u;
})(Math.pow(z8, z !== z8));
switch (a | Array.from({ length: 0 }, (e, i) => i * NaN)) {
case /[0-9]+/g:
var w8 = 2;
while (w8 > 0) {
w8--;
switch (String.raw`a${'hello'}b`) {
case undefined:
var x = new Set();
break;
case /[0-9]+/g:
case undefined:
print(Array.from({ length: 4 }, (e, i) => i * 100));
default:
a += String(JSON.stringify(w8));
}
}
break;
case 'a,b,c':
case null:
a &= z.y;
default:
--a;
}
function h(a9, data9) {
function run4() {
data9 = (function (u) {
return u;
})([(function (u) {
return u;
})(a), Array.from({ length: 0 }, (e, i) => i * 0.5), String.raw`a${a9}b`]);
(function (u) {
return u;
})(new Set());
data9 |= Math.abs(100, ((/x/i, a9), (z, data9)));
if (new.target) {
print('ctor');
}
return -([z8, Object.keys({ a: 1 })]);
}
print(run4());
return JSON.stringify(([...[w, undefined]], (true ? 'a,b,c' : true)));
}
print(h(Infinity, /[0-9]+/g));
debugger;
for (var k in { a: 1, b: 2 }) {
(String(100)) ?? (({ x: 1, length: 2 })[`t1 ${/ab+c/} end`]);
}
