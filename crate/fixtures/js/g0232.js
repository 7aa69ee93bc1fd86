;
var w8 = 0;
do {
w8 += 1;
} while (w8 < 4);
w8 = w8.p0;
function f8() {
{
w8 *= (w8 ? JSON.stringify(3) : `t0 ${(w8) ?? (w8)} end`);
--w8;
}
return String.raw`a${new Error()}b`;
}
print(f8());
String({ x0: [0x10, w8] });
try {
w8 = String.raw`a${undefined}b`;
let str = JSON.stringify(~(Object.keys({})));
} catch (err) {
print(err);
} finally {
try {
{
w8 = { value0: Array.from({ length: 0 }, (e, i) => i * 10) };
}
} catch (e19) {
print(e19);
}
}
var w = 0;
while (w > 0) {
w--;
for (let p8 of []) {
{
let val3 = [(function (u) {
return u;
})(String('a,b,c')), , true];
}
}
}
switch (String.raw`a${(function (u) {
return u;
})(/x/i % 10)}b`) {
case /ab+c/:
function compute() {
const b3 = new Set();
--w;
w8 = new Set();
if (new.target) {
print('ctor');
}
print(arguments.length);
return !({ p10: [b3], value1: ((p, q = "x") => p + q)(null) });
}
print(compute());
break;
case 'a,b,c':
case NaN:
w8--;
default:
print(JSON.stringify([(w, 'hello'), JSON.stringify(false), ((p, q = '0') => p + q)(w)]), ~(w8['str'.length]));
}
w8 |= [];
w8 = [...[(w.p1, JSON.stringify(false)), w.p0]];
