var w = 2;
while (w > 0) {
w--;
for (var j4 = 0; j4 < 1; j4++) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue outer;
}
}
try {
String.raw`a${[NaN, true, w]}b` >= new Array(10);
w = new WeakMap();
throw new RangeError('0');
} catch (ex) {
print(ex.message);
}
}
}
let z = [...[String(Array.from({ length: 2 }, (e, i) => i * NaN)), ([/[0-9]+/g, , w], +(w))]];
w = w;
for (let i = 0; i < 5; i++) {
print([...[[...[Array.from({ length: 2 }, (e, i) => i * 0.5), `t0 ${w} end`]], ((p, q = /x/i) => p + q)(Math.floor('\u0041', z))]]);
print('\u0041');
}
var flag4 = u => {
return u;
};
w--;
var c1 = function (...u) {
return u.length;
};
