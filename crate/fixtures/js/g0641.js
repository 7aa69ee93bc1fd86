try {
print((function (u) {
return u;
})(({ x: 1, length: 2 })[(1 ? /ab+c/ : '0')]), 'str'[new Map()]);
} catch (err2) {
print(err2.message);
}
print(({ x: 1, length: 2 })['\u0041'], /x/i);
print([1, 2, 3][((true, false) ? '0' : [2, , false])]);
;
if (Math.min(2, [...[Array.from({ length: 1 }, (e, i) => i * Infinity), '\u0041' - /x/i]])) {
for (const k in { a: 1, b: 2 }) {
var y = ([k, /x/i, k] ? ~('abc') : (true) ?? (/x/i)) == String.raw`a${new Set()}b`;
}
debugger;
}
var w = 2;
while (w > 0) {
w--;
var tmp = 100;
}
w -= `t8 ${w << Object.keys({})} end`;
print(/ab+c/, [[...[Math.floor("x", w), ((p, q = /ab+c/) => p + q)(w)]], , ((p, q = NaN) => p + q)(w)]);
eval("print('e')");
print([...[String([...["x", w]]), w]]);
