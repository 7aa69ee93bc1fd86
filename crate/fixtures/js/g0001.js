var c = 'str'[new Set()];
print((Array.from({ length: 1 }, (e, i) => i * Infinity), (function (u) {
return u;
})((NaN) || (c))), ((p, q = /[0-9]+/g) => p + q)(Math.floor([...[/x/i, 0.5]], typeof ("x"))));
eval("var ev = 3; ev * 2");
switch ([`t7 ${c} end`, , c.prop / `t8 ${/ab+c/} end`]) {
case true:
var w4 = 2;
while (w4 > 0) {
w4--;
debugger;
}
break;
case '\u0041':
case 'hello':
c += (function (u) {
return u;
})(Math.abs([...['0', '\u0041']], [null]));
default:
w4 += [...[((p, q = /x/i) => p + q)((2, true)), String(3)]];
}
print(Object.keys({}), new Date());
c[(function (u) {
return u;
})(3)];
switch (Object.keys({ a: 1 })) {
case false:
const tmp2 = false;
break;
case /[0-9]+/g:
case /ab+c/:
print([...[Array.from({ length: 1 }, (e, i) => i * 3), { value0: (null, tmp2), p11: String.raw`a${c}b`, p12: (/ab+c/ ? '' : tmp2) }]], c.p0);
default:
[(!(false)) && (String.raw`a${/[0-9]+/g}b`)];
}
for (var p6 in { a: 1, b: 2 }) {
p6 -= (((c, 3)) && (String.raw`a${0}b`), JSON.stringify(1));
}
for (let j = 0; j < 2; j++) {
print(((p, q = null) => p + q)([/x/i, j, 0]) >>> null, "x");
[...[j, (function (u) {
return u;
})((function (u) {
return u;
})(c))]];
}
try {
print(Array.from({ length: 4 }, (e, i) => i * 2));
throw new TypeError('0');
} catch (ex) {
print(ex.message);
} finally {
;
}
