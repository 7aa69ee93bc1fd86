print(10, false);
var w = 0;
do {
w += 1;
} while (w < 2);
try {
function make9() {
print(Array.from({ length: 4 }, (e, i) => i * 2), (((function (u) {
return u;
})(w), `t6 ${undefined} end`) ? ('\n') ?? (null) : Array.from({ length: 2 }, (e, i) => i * NaN)));
print(Object.keys({}));
w = Array.from({ length: 2 }, (e, i) => i * NaN) == w[w.x];
print(arguments.length);
return false;
}
print(make9());
throw new TypeError('0');
} catch (ex3) {
print(ex3.message);
} finally {
{
w |= ({ x: 1, length: 2 })[(function (u) {
return u;
})(String('a,b,c'))];
}
}
;
w++;
var w8 = 0;
while (w8 > 0) {
w8--;
w++;
}
print([Array.from({ length: 2 }, (e, i) => i * 3), w, w.length], [String.raw`a${[1, 2, 3][w]}b`]);
Math.round((function (u) {
return u;
})(undefined), -(((p, q = 'abc') => p + q)(NaN)));
print(-(!(!(undefined))));
let z = new WeakMap();
