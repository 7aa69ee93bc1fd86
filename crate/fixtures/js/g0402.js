eval("1 + 2");
switch ((null) ?? ([])) {
case /ab+c/:
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break;
}
}
break;
case '\u0041':
case null:
print(0, /[0-9]+/g);
default:
print(true);
}
{
;
}
print([...[new Set(), /ab+c/]]);
([Math.round('0', '0'), ({ x: 1, length: 2 })[1], String.raw`a${/[0-9]+/g}b`]) ?? (String.raw`a${{ length0: null, p11: '', p12: 'abc' }}b`);
if (((p, q = "x") => p + q)(2)) {
;
for (let k7 = 0; k7 < 5; k7++) {
function g0() {
var acc4 = k7;
acc4 = k7;
k7 &= JSON.stringify(((p, q = false) => p + q)(JSON.stringify('\u0041')));
if (new.target) {
print('ctor');
}
return JSON.stringify((function (u) {
return u;
})(Array.from({ length: 3 }, (e, i) => i * 2)));
}
g0();
k7 &= new Date();
}
function run8(m2, z5) {
m2--;
print(Object.keys({ a: 1 }));
print(arguments.length);
return Math.floor(m2[JSON.stringify(z5)], ((p, q = /x/i) => p + q)(String.raw`a${''}b`));
}
run8(/[0-9]+/g, '');
} else {
;
}
var w = 0;
do {
w += 1;
} while (w < 3);
var w5 = 1;
while (w5 > 0) {
w5--;
w5 = `t2 ${String(w.y)} end`;
}
(function (u) {
return u;
})(w);
var w6 = 1;
while (w6 > 0) {
w6--;
--w;
}
;
