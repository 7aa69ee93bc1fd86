print(new Map(), (/[0-9]+/g, ~(Object.keys({}))));
{
var w = 0;
do {
w += 1;
} while (w < 1);
try {
w = String.raw`a${new WeakMap()}b`;
w <<= Math.floor(String.raw`a${[...[10, 0.5]]}b`, String(!('abc')));
throw new Error('');
} catch (ex) {
print(ex);
}
}
for (const p in { a: 1, b: 2 }) {
;
}
let item = `t8 ${(function (u) {
return u;
})((function (u) {
return u;
})(false))} end`;
var w6 = 0;
while (w6 > 0) {
w6--;
w6;
}
