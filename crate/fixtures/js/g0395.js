(Array.from({ length: 4 }, (e, i) => i * 255)) || (new Set());
;
for (var k of []) {
{
k -= [(new WeakMap(), ((p, q = 0.5) => p + q)(k))];
for (let i = 0; i < 3; i++) {
(2 ? true : [...[[k, , k], [k]]]);
i++;
}
}
}
print('a,b,c');
;
print("x");
[...[3, Array.from({ length: 1 }, (e, i) => i * -1)]];
for (var k4 = 0; k4 < 4; k4++) {
print(Object.keys([1, 2]));
var w7 = 2;
while (w7 > 0) {
w7--;
switch (Infinity) {
case 3:
;
break;
case 'a,b,c':
case 0x10:
w7 = w7;
default:
k4 = String(`t3 ${(function (u) {
return u;
})(1)} end`);
}
}
}
;
for (let i7 = 0; i7 < 2; i7++) {
++i7;
print(((p, q = /[0-9]+/g) => p + q)((String.raw`a${i7}b` ? `t8 ${i7} end` : (null ? i7 : 10))), new Error() / JSON.stringify((i7 ? 1e3 : /x/i)));
}
