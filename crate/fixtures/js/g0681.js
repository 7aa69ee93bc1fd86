function g4() {
/x/i;
print(arguments.length);
return 0;
}
print(g4());
var data = (Array.from({ length: 0 }, (e, i) => i * 1)) && ([1, 2, 3][Math.max(null, '\u0041')]);
var { next: y0 = 0x10, ...rest } = { x: 1 };
y0 = (y0, g4(String.raw`a${y0}b`, (function (u) {
return u;
})(3)));
y0 = { p10: (Object.keys({}), y0), length1: new Set() };
function g(str1) {
debugger;
return new Map();
}
g("x");
eval("1 + 2");
for (var k9 = 0; k9 < 2; k9++) {
var n5 = ((p, q = null) => p + q)(y0);
for (var k2 in [1, 2]) {
if ((String.raw`a${y0}b`, new WeakMap())) {
eval("[1, 2].length");
data = [...[[(function (u) {
return u;
})(Infinity), , ((p, q = 255) => p + q)(undefined)], ((n5) ?? (/ab+c/)) || ({ p00: undefined, p11: y0, y2: /x/i })]];
`t1 ${Array.from({ length: 2 }, (e, i) => i * NaN)} end`;
} else {
--data;
}
}
}
