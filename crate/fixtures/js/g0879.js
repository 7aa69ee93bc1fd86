print(/ab+c/);
{
print(2);
}
eval("print('e')");
eval("[1, 2].length");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
var w = 0;
do {
w += 1;
} while (w < 4);
{
w <<= String(w[String.raw`a${w}b`]);
function helper() {
--w;
print((Object.keys({ a: 1 }) ? ((false, '\u0041')) ?? (Array.from({ length: 0 }, (e, i) => i * 1e3)) : JSON.stringify(true < undefined)));
if (new.target) {
print('ctor');
}
return ((function (u) {
return u;
})(new Array(3))) && (((p, q = false) => p + q)(String.raw`a${Infinity}b`));
}
print(helper());
}
w = String.raw`a${/ab+c/}b`;
