switch (((p, q = false) => p + q)(`t6 ${typeof (1e3)} end`)) {
case '\u0041':
print([({ x: 1, length: 2 })[{ p00: true, p01: 0.5 }], , typeof (Math.pow(true, undefined))]);
break;
case false:
case /x/i:
;
default:
print([((1e3, 100)) ?? (("x") ?? (100)), , String((function (u) {
return u;
})(null))]);
}
eval("print('e')");
try {
if (/[0-9]+/g) {
debugger;
}
throw new RangeError("x");
} catch (err1) {
print(err1);
} finally {
var w3 = 0;
do {
w3 += 1;
} while (w3 < 3);
}
;
;
;
`t6 ${typeof (['abc', , ''])} end`;
null;
