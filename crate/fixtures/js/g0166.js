var w8 = 0;
do {
w8 += 1;
} while (w8 < 1);
w8 = /x/i;
if (new Object()) {
try {
function check(x5, val2) {
const obj = [null, , /x/i] >= [...[true, true]] ^ x5[(x5) && (null)];
print(({ x: 1, length: 2 }).value);
obj.p1;
return (function (u) {
return u;
})(Math.sqrt((function (u) {
return u;
})(obj), [false, 0x10, w8]));
}
print(check(/ab+c/, "x"));
throw new Error('abc');
} catch (e9) {
print(e9);
}
} else {
w8 = (function (u) {
return u;
})(new Set());
}
var m = JSON.stringify([[...[w8, '\u0041']]]);
var tmp = Array.from({ length: 1 }, (e, i) => i * -1);
--tmp;
var w = 1;
while (w > 0) {
w--;
{
function make(c5) {
const acc2 = `t2 ${{ next0: [...['', c5]] }} end`;
print(w, new Map());
print(arguments.length);
return String.raw`a${-({ p10: w })}b`;
}
print(make(/[0-9]+/g));
}
}
try {
Math.min(new Date(), String.raw`a${Math.pow(/[0-9]+/g, /x/i)}b`);
function test(z8) {
z8 *= ((p, q = false) => p + q)((w) && (Math.floor(tmp, w8)));
return { p00: 0x10, p11: ((undefined ? w8 : false)) || ([/x/i]) };
}
print(test('a,b,c'));
throw new TypeError('\u0041');
} catch (ex9) {
print(ex9);
}
var w2 = 0;
do {
w2 += 1;
} while (w2 < 4);
if ((function (u) {
return u;
})((/x/i ? String(m) : Math.abs(null, tmp)))) {
tmp = String(JSON.stringify((0) || (/ab+c/)));
var w7 = 2;
while (w7 > 0) {
w7--;
switch (new WeakMap()) {
case null:
print({ length0: void (new Set()), value1: new Array(10), next2: Math.max(tmp.value, false) }, m.p1);
break;
case undefined:
case 0.5:
w8 &= ([...[`t0 ${m} end`, ((p, q = "x") => p + q)('\n')]], [...[w7, null | w2]]);
default:
--w;
}
}
} else {
try {
{
print({ y0: `t2 ${Math.sqrt(w, w8)} end` });
}
throw new TypeError('abc');
} catch (ex) {
print(ex.message);
}
}
var val4 = async function () {
return await NaN;
};
