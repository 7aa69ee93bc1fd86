eval("[1, 2].length");
var w = 0;
do {
w += 1;
} while (w < 3);
print((~([1, 2, 3][w]), 0.5), (function (u) {
return u;
})((`t8 ${"x"} end`, w)));
{
{
w &= `t1 ${[] + (function (u) {
return u;
})(10)} end`;
}
function check() {
print(((p, q = /[0-9]+/g) => p + q)(0x10), /[0-9]+/g);
const m7 = { p10: (w ? false : w) !== String.raw`a${w}b` };
return (['0', , 1e3] ? [...[false, w]] : [m7]) >>> -1;
}
print(check());
}
--w;
var z = (u, v = 'abc') => u + v;
for (let j = 0; j < 1; j++) {
var [x, , ...rest] = [0, 2, 3];
if (z) {
x = ({ x: 1, length: 2 })[String.raw`a${Object.keys([1, 2])}b`];
j--;
} else {
if (Object.keys({})) {
print((function (u) {
return u;
})({ prop0: x }), (1) || ((/ab+c/ !== '\u0041', String.raw`a${'\u0041'}b`)));
z |= [...[[...[z.next, -1]], Array.from({ length: 3 }, (e, i) => i * 0)]];
}
{
print(new Array(0), Object.keys([1, 2]));
}
}
}
if (3) {
for (var i9 = 0; i9 < 2; i9++) {
i9 = `t2 ${'str'[/ab+c/ !== z]} end`;
function test5(z7) {
;
'str'.p1;
if (new.target) {
print('ctor');
}
return z > Math.sqrt({ y0: '0', prop1: /[0-9]+/g, y2: z7 }, ((p, q = undefined) => p + q)(z7));
}
print(test5(/ab+c/));
}
w--;
print(w, /[0-9]+/g);
}
w = ((p, q = 'hello') => p + q)([JSON.stringify(w)]);
