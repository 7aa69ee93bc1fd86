var c = (u, v = 'a,b,c') => u + v;
print([...[new WeakMap(), String(String(c))]]);
var w0 = 3;
while (w0 > 0) {
w0--;
--w0;
}
;
++c;
for (let j = 0; j < 2; j++) {
if (String.raw`a${(Array.from({ length: 1 }, (e, i) => i * NaN) ? `t5 ${/x/i} end` : new WeakMap())}b`) {
[[-1, String.raw`a${0}b`, (function (u) {
return u;
})(w0)], [...[((p, q = 'hello') => p + q)(w0), (function (u) {
return u;
})(255)]]];
try {
;
} catch (e2) {
print(e2.message);
}
}
c++;
}
print([]);
