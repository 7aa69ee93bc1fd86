switch (+(({ x: 1, length: 2 }).length)) {
case 3:
for (var k2 = 0; k2 < 3; k2++) {
k2 = k2[([...[0.5, /[0-9]+/g]]) && ([k2, , k2])];
k2++;
}
break;
case /x/i:
case true:
print(/ab+c/, Math.abs(("x", [...['\n', /[0-9]+/g]]), Array.from({ length: 2 }, (e, i) => i * 10)));
default:
;
}
;
let acc = new WeakMap();
;
const obj2 = (function (u) {
return u;
})(new Date());
;
try {
print(Math.floor(acc[((p, q = 1e3) => p + q)(acc)], ((p, q = null) => p + q)(obj2.length)), String.raw`a${[]}b`);
throw new Error('');
} catch (e0) {
print(e0);
}
;
