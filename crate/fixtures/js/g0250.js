let y = 100;
;
try {
eval("[1, 2].length");
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue;
}
}
} catch (ex) {
print(ex);
}
y <<= JSON.stringify((null == undefined ? 0 : undefined));
++y;
y = (function (u) {
return u;
})(String(y.length));
var w = 1;
while (w > 0) {
w--;
print(`t0 ${(function (u) {
return u;
})(((p, q = 'a,b,c') => p + q)(w))} end`, w[w.p1]);
}
function run6() {
var w12 = 0;
do {
w12 += 1;
} while (w12 < 2);
switch ((Object.keys({})) && (String.raw`a${y}b` < Math.round(w12, y))) {
case '0':
((((p, q = '0') => p + q)(/x/i)) && (w >>> w12), (function (u) {
return u;
})(null));
break;
case true:
case 'a,b,c':
print((function (u) {
return u;
})(/[0-9]+/g));
default:
++y;
}
function compute0(a, obj) {
obj--;
y += ((p, q = undefined) => p + q)(((p, q = NaN) => p + q)(Object.keys([1, 2])));
w++;
if (new.target) {
print('ctor');
}
return new Map();
}
print(compute0(false, -1));
return String((function (u) {
return u;
})((2) ?? (w12)));
}
print(run6());
w = [...[String(y), [y, y, 0.5]]] <= void (y);
y;
var w1 = 3;
while (w1 > 0) {
w1--;
print(w.p0);
}
